#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "parkfun/error.hpp"
#include "parkfun/nsym.hpp"

using namespace parkfun;

namespace {

NSymPoly random_poly(std::mt19937 &rng, Basis b, std::size_t n)
{
    std::uniform_int_distribution<int> coeff(-9, 9);
    NSymPoly f(b);
    for (const auto &c : compositions_of(n)) {
        f.add_term(c, coeff(rng));
    }
    return f;
}

// Permutations of [n] whose descent set equals that of pi.
BigInt permutations_with_descents(const Composition &pi)
{
    const std::size_t n = pi.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 1);
    const auto target = pi.descents();
    BigInt count = 0;
    do {
        std::vector<std::size_t> d;
        for (std::size_t i = 1; i < n; ++i) {
            if (p[i - 1] > p[i]) {
                d.push_back(i);
            }
        }
        if (d == target) {
            ++count;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

} // namespace

TEST_CASE("small conversions")
{
    const auto s21 = NSymPoly::monomial(Basis::S, {2, 1});
    NSymPoly r(Basis::R);
    r.add_term({2, 1}, 1);
    r.add_term({3}, 1);
    CHECK(s_to_ribbon(s21) == r);

    NSymPoly s(Basis::S);
    s.add_term({1, 2}, 1);
    s.add_term({3}, -1);
    CHECK(ribbon_to_s(NSymPoly::monomial(Basis::R, {1, 2})) == s);

    NSymPoly l(Basis::L);
    l.add_term({1, 1}, 1);
    l.add_term({2}, -1);
    CHECK(s_to_lambda(NSymPoly::monomial(Basis::S, {2})) == l);
    CHECK(ribbon_to_lambda(NSymPoly::monomial(Basis::R, {2})) == l);
    CHECK(ribbon_to_lambda(NSymPoly::monomial(Basis::R, {1, 1})) == NSymPoly::monomial(Basis::L, {2}));
    CHECK(ribbon_to_lambda(NSymPoly::monomial(Basis::R, {1, 1, 1})) == NSymPoly::monomial(Basis::L, {3}));

    NSymPoly r12(Basis::L);
    r12.add_term({2, 1}, 1);
    r12.add_term({3}, -1);
    CHECK(ribbon_to_lambda(NSymPoly::monomial(Basis::R, {1, 2})) == r12);
}

TEST_CASE("conversions round trip")
{
    std::mt19937 rng(20240611);
    const Basis all[] = {Basis::S, Basis::R, Basis::L};
    for (std::size_t n = 0; n <= 6; ++n) {
        for (Basis a : all) {
            const NSymPoly f = random_poly(rng, a, n);
            for (Basis b : all) {
                const NSymPoly g = to_basis(f, b);
                CHECK(g.basis() == b);
                CHECK(to_basis(g, a) == f);
                CHECK(specialize_exponential(g) == specialize_exponential(f));
                CHECK(specialize_types(g) == specialize_types(f));
            }
        }
    }
    const NSymPoly f = random_poly(rng, Basis::S, 5);
    CHECK(ribbon_to_lambda(s_to_ribbon(f)) == s_to_lambda(f));
    CHECK(lambda_to_s(s_to_lambda(f)) == f);
}

TEST_CASE("exponential specialization of ribbons counts permutations by descent set")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto &pi : compositions_of(n)) {
            CAPTURE(pi.to_string());
            CHECK(specialize_exponential(NSymPoly::monomial(Basis::R, pi)) == permutations_with_descents(pi));
        }
    }
}

TEST_CASE("specializations")
{
    CHECK(specialize_exponential(NSymPoly::monomial(Basis::S, {2, 1})) == 3);
    CHECK(specialize_exponential(NSymPoly::monomial(Basis::L, {2, 2})) == 6);
    CHECK(specialize_exponential(NSymPoly(Basis::S)) == 0);
    CHECK(specialize_types(NSymPoly::monomial(Basis::S, {1, 1, 2}, 7)) == 7);
    // Lambda^2 = S^{11} - S^2.
    CHECK(specialize_types(NSymPoly::monomial(Basis::L, {2})) == 0);

    NSymPoly mixed(Basis::S);
    mixed.add_term({1}, 1);
    mixed.add_term({2}, 1);
    CHECK_THROWS_AS(mixed.degree(), mixed_degree);
    CHECK_THROWS_AS(specialize_exponential(mixed), mixed_degree);
    CHECK(NSymPoly(Basis::S).degree() == std::nullopt);
    CHECK(NSymPoly::monomial(Basis::S, {3, 1}).degree() == 4u);
}

TEST_CASE("products")
{
    const auto a = NSymPoly::monomial(Basis::S, {1}, 2);
    const auto b = NSymPoly::monomial(Basis::S, {2}, 3);
    CHECK(product(a, b) == NSymPoly::monomial(Basis::S, {1, 2}, 6));
    CHECK(product(NSymPoly::unit(Basis::L), NSymPoly::monomial(Basis::L, {2})) == NSymPoly::monomial(Basis::L, {2}));
    CHECK_THROWS_AS(product(NSymPoly::monomial(Basis::R, {1}), NSymPoly::monomial(Basis::R, {1})), basis_mismatch);
    CHECK_THROWS_AS(product(a, NSymPoly::monomial(Basis::L, {1})), basis_mismatch);

    // S is multiplicative, so the product survives conversion to Lambda.
    std::mt19937 rng(7);
    const auto f = random_poly(rng, Basis::S, 3);
    const auto g = random_poly(rng, Basis::S, 2);
    CHECK(s_to_lambda(product(f, g)) == product(s_to_lambda(f), s_to_lambda(g)));
}

TEST_CASE("arithmetic")
{
    auto f = NSymPoly::monomial(Basis::R, {2}, 3);
    f += NSymPoly::monomial(Basis::R, {2}, -3);
    CHECK(f.is_zero());
    auto g = NSymPoly::monomial(Basis::S, {1, 1}, 2) * BigInt(5);
    CHECK(g.coefficient({1, 1}) == 10);
    CHECK((-g).coefficient({1, 1}) == -10);
    CHECK(g.coefficient({2}) == 0);
    CHECK_THROWS_AS(g += NSymPoly::monomial(Basis::R, {2}), basis_mismatch);
}

TEST_CASE("adams operation")
{
    NSymPoly expected(Basis::S);
    expected.add_term({1, 1}, 1);
    expected.add_term({2}, 2);
    CHECK(adams_scale(NSymPoly::monomial(Basis::S, {2}), 2) == expected);
    CHECK(adams_scale(NSymPoly::monomial(Basis::S, {2, 1}), 1) == NSymPoly::monomial(Basis::S, {2, 1}));
    CHECK(adams_scale(NSymPoly::monomial(Basis::S, {3}), 0).is_zero());

    // S_n(kA) specializes to k^n / n! times n!, i.e. k^n structures.
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 4; ++k) {
            CHECK(specialize_exponential(adams_scale(NSymPoly::monomial(Basis::S, {n}), k)) == power(k, n));
        }
    }
}

TEST_CASE("rendering")
{
    NSymPoly f(Basis::R);
    f.add_term({1, 1}, 2);
    f.add_term({2}, 3);
    CHECK(to_text(f) == "2*R[1,1] + 3*R[2]");
    CHECK(to_latex(f) == "2R_{11} + 3R_{2}");

    NSymPoly g(Basis::L);
    g.add_term({1, 1}, 3);
    g.add_term({2}, -1);
    CHECK(to_text(g) == "3*L[1,1] - L[2]");
    CHECK(to_latex(g) == "3\\Lambda^{11} - \\Lambda^{2}");
    CHECK(to_latex(NSymPoly::monomial(Basis::S, {10, 1})) == "S^{10,1}");
    CHECK(to_text(NSymPoly(Basis::S)) == "0");
    CHECK(parse_basis("R") == Basis::R);
    CHECK(basis_name(Basis::L) == "L");
    CHECK_THROWS_AS(parse_basis("Q"), parse_error);
}
