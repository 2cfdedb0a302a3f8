#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "parkfun/error.hpp"
#include "parkfun/parking.hpp"

using namespace parkfun;

namespace {

// Sorted-word characterisation: the i-th smallest letter is at most x(i).
bool parks_sorted(Word w, const WeightSequence &x)
{
    std::sort(w.begin(), w.end());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0 || BigInt(w[i]) > x(i + 1)) {
            return false;
        }
    }
    return true;
}

// Ordered set partitions of [n] counted as surjections [n] -> [k].
std::size_t fubini_by_surjections(std::size_t n)
{
    if (n == 0) {
        return 1;
    }
    std::size_t total = 0;
    Word w(n, 1);
    for (;;) {
        std::set<Letter> image(w.begin(), w.end());
        if (*image.rbegin() == image.size()) {
            ++total;
        }
        std::size_t pos = n;
        while (pos > 0 && w[pos - 1] == n) {
            w[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++w[pos - 1];
    }
    return total;
}

const WeightSequence primes = WeightSequence::parse("explicit:2,3,5,7,11,13,17,19");

} // namespace

TEST_CASE("twenty-letter example parks")
{
    const auto x = WeightSequence::parse("explicit:2,2,3,5,8,8,8,8,8,8,9 tail:+1/6");
    // letters a..t
    const Word f{3, 9, 5, 1, 5, 1, 2, 3, 9, 5, 5, 9, 1, 5, 9, 5, 9, 9, 9, 9};
    CHECK(is_parking(f, x));
    const auto q = to_set_sequence(f, 10);
    CHECK(q.blocks[0] == std::vector<std::size_t>{4, 6, 13});
    CHECK(q.blocks[1] == std::vector<std::size_t>{7});
    CHECK(q.blocks[2] == std::vector<std::size_t>{1, 8});
    CHECK(q.blocks[3].empty());
    CHECK(q.blocks[4] == std::vector<std::size_t>{3, 5, 10, 11, 14, 16});
    CHECK(q.blocks[8].size() == 8);
    CHECK(to_word(q) == f);

    Word g = f;
    g[3] = 10;
    g[5] = 10;
    g[12] = 10;
    CHECK_FALSE(is_parking(g, x));
}

TEST_CASE("is_parking agrees with the sorted characterisation")
{
    std::mt19937 rng(99);
    for (const char *e : {"m", "m+1", "2*m-1", "ceil((m+1)/3)", "m^2-m+1"}) {
        const auto x = WeightSequence::parse(e);
        for (std::size_t n = 1; n <= 6; ++n) {
            std::uniform_int_distribution<Letter> letter(1, to_letter(x(n)) + 1);
            for (int trial = 0; trial < 200; ++trial) {
                Word w(n);
                for (auto &c : w) {
                    c = letter(rng);
                }
                CHECK(is_parking(w, x) == parks_sorted(w, x));
            }
        }
    }
}

TEST_CASE("classical enumeration")
{
    const auto x = WeightSequence::identity();
    const auto pf3 = enumerate_structures(x, 3);
    CHECK(pf3.size() == 16);
    CHECK(std::is_sorted(pf3.begin(), pf3.end()));
    CHECK(pf3.front() == Word{1, 1, 1});
    CHECK(pf3.back() == Word{3, 2, 1});
    CHECK(enumerate_structures(x, 0) == std::vector<Word>{Word{}});
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto types = enumerate_types(x, n);
        CHECK(types.size() == catalan[n]);
        for (const auto &t : types) {
            CHECK(std::is_sorted(t.begin(), t.end()));
        }
    }
    CHECK_THROWS_AS(enumerate_structures(x, 6, 1000), budget_exceeded);
    try {
        enumerate_types(WeightSequence::parse("m^2"), 6, 10);
    } catch (const budget_exceeded &e) {
        CHECK_FALSE(e.candidates().empty());
    }
}

TEST_CASE("ordered set partitions and the Fubini numbers")
{
    const std::size_t fubini[] = {1, 1, 3, 13, 75, 541};
    for (std::size_t n = 0; n <= 5; ++n) {
        const auto osp = ordered_set_partitions(n);
        CHECK(osp.size() == fubini[n]);
        CHECK(osp.size() == fubini_by_surjections(n));
        CHECK(std::set<OrderedSetPartition>(osp.begin(), osp.end()).size() == osp.size());
        for (const auto &p : osp) {
            CHECK(p.size() == n);
        }
    }
}

TEST_CASE("primitive example with primes")
{
    const OrderedSetPartition p{{{2}, {3, 5, 6}, {4}, {1}}};
    const Word f{13, 2, 3, 11, 3, 3};
    CHECK(from_ordered_set_partition(p, primes) == f);
    CHECK(is_primitive(f, primes));
    CHECK(dimension(f, primes) == 2);
    const InversionSet expected{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}};
    CHECK(inversion_set(f) == expected);

    CHECK_FALSE(is_primitive(Word{13, 2, 3, 11, 3, 2}, primes));
    CHECK(is_primitive(Word{2, 2, 5}, primes));
    CHECK_THROWS_AS(dimension(Word{2, 2, 3}, primes), not_primitive);
}

TEST_CASE("primitives")
{
    for (const char *e : {"m", "m+1", "2*m"}) {
        const auto x = WeightSequence::parse(e);
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto prims = primitives(x, n);
            CHECK(prims.size() == ordered_set_partitions(n).size());
            for (const auto &f : prims) {
                CHECK(is_primitive(f, x));
                CHECK(is_parking(f, x));
            }
            std::size_t count = 0;
            for (const auto &f : enumerate_structures(x, n)) {
                count += is_primitive(f, x) ? 1 : 0;
            }
            CHECK(count == prims.size());
        }
    }
    CHECK_THROWS_AS(primitives(WeightSequence::parse("ceil((m+1)/3)"), 2), not_injective);
    CHECK(primitive_preimages(WeightSequence::parse("ceil((m+1)/3)"), 2).size() == 3);
}

TEST_CASE("standardization")
{
    const auto catalan = WeightSequence::parse("explicit:1,1,2,5,14,42");
    CHECK(standardize(Word{1, 4, 11, 1, 31, 1}, catalan) == Word{1, 5, 14, 1, 42, 2});
    const auto x = WeightSequence::identity();
    CHECK(standardize(Word{2, 2, 1}, x) == Word{2, 3, 1});
    for (const auto &f : enumerate_structures(x, 4)) {
        const Word s = standardize(f, x);
        CHECK(is_primitive(s, x));
        CHECK(leq_pointwise(f, s));
    }
    CHECK_THROWS_AS(leq_pointwise(Word{1}, Word{1, 2}), length_mismatch);
    CHECK(leq_pointwise(Word{1, 2}, Word{1, 3}));
    CHECK_FALSE(leq_pointwise(Word{2, 2}, Word{1, 3}));
}

TEST_CASE("0-Hecke action")
{
    // (13|.|2) . T_1 = (23|.|1)
    const SetSequence q{{{1, 3}, {}, {2}}};
    const SetSequence r{{{2, 3}, {}, {1}}};
    CHECK(hecke_action(q, 1) == FormalSum<SetSequence>(r));
    CHECK(hecke_action(r, 1) == FormalSum<SetSequence>(r, -1));
    CHECK(hecke_action(q, 2).is_zero() == false);
    const SetSequence same{{{1, 2}, {3}}};
    CHECK(hecke_action(same, 1).is_zero());
    CHECK_THROWS_AS(hecke_action(q, 3), error);

    for (std::size_t n = 0; n <= 4; ++n) {
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto all = all_set_sequences(n, k);
            std::size_t expected = 1;
            for (std::size_t i = 0; i < n; ++i) {
                expected *= k;
            }
            CHECK(all.size() == expected);
            const auto check = check_hecke_relations(n, k);
            CAPTURE(check.failure);
            CHECK(check.ok);
            CHECK(check.basis_elements == expected);
        }
    }
}

TEST_CASE("letters")
{
    CHECK(to_letter(BigInt(17)) == 17);
    CHECK_THROWS_AS(to_letter(BigInt(1) << 70), error);
    CHECK(word_to_string(Word{1, 2, 11}) == "(1,2,11)");
}
