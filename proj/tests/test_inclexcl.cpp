#include <doctest.h>

#include <algorithm>
#include <set>

#include "parkfun/counting.hpp"
#include "parkfun/error.hpp"
#include "parkfun/inclexcl.hpp"

using namespace parkfun;

namespace {

Word digits(const char *s)
{
    Word w;
    for (; *s; ++s) {
        w.push_back(static_cast<Letter>(*s - '0'));
    }
    return w;
}

} // namespace

TEST_CASE("primitives above (1,1,2,3)")
{
    const auto x = WeightSequence::identity();
    const Word f{1, 1, 2, 3};
    std::set<Word> expected;
    for (const char *s : {"1243", "2143", "1133", "1423", "1324", "1234", "2134", "3124", "4123", "1143", "1233",
                          "2133", "1323", "1224", "1134", "2124", "3123"}) {
        expected.insert(digits(s));
    }
    std::set<Word> above;
    for (const auto &p : primitives(x, 4)) {
        if (leq_pointwise(f, p)) {
            above.insert(p);
        }
    }
    CHECK(above == expected);

    std::set<Word> members;
    BigInt alternating = 0;
    for (const auto &cls : inversion_classes_above(x, f)) {
        members.insert(cls.members.begin(), cls.members.end());
        const auto d = binomial_shape(cls.polynomial);
        REQUIRE(d.has_value());
        CHECK(*d == cls.max_dimension);
        CHECK(cls.signed_sum == (cls.inversions.empty() ? 1 : 0));
        alternating += cls.signed_sum;
    }
    CHECK(members == expected);
    CHECK(alternating == 1);

    const auto poly = dimension_polynomial(x, f, inversion_set(digits("1243")));
    CHECK(poly == DimensionPolynomial{1, 1});
    CHECK(to_string(poly) == "1 + t");
}

TEST_CASE("binomial shape")
{
    CHECK(binomial_shape({1}) == 0u);
    CHECK(binomial_shape({1, 2, 1}) == 2u);
    CHECK(binomial_shape({1, 3, 3, 1}) == 3u);
    CHECK_FALSE(binomial_shape({1, 2, 2}).has_value());
    CHECK_FALSE(binomial_shape({}).has_value());
    CHECK(to_string(DimensionPolynomial{1, 2, 1}) == "1 + 2t + t^2");
}

TEST_CASE("coefficient map is the indicator of PF_n(x)")
{
    const auto primes = WeightSequence::parse("explicit:2,3,5,7,11");
    for (const auto &x : {WeightSequence::parse("m"), WeightSequence::parse("m+1"), WeightSequence::parse("2*m"),
                          primes}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            CAPTURE(x.describe());
            CAPTURE(n);
            const auto r = verify_inclusion_exclusion(x, n);
            CHECK(r.ok);
            CHECK(r.offending.empty());
            CHECK(r.parking_functions == count_structures(x, n));
            CHECK(r.coefficients.terms().size() == r.parking_functions);
            CHECK(inclusion_exclusion_count(x, n) == count_structures(x, n));
        }
    }
}

TEST_CASE("distribution over inversion sets, nondecreasing f, n <= 4")
{
    for (const char *e : {"m", "m+1", "2*m-1"}) {
        const auto x = WeightSequence::parse(e);
        for (std::size_t n = 1; n <= 4; ++n) {
            for (const auto &f : enumerate_types(x, n)) {
                for (const auto &cls : inversion_classes_above(x, f)) {
                    const auto d = binomial_shape(cls.polynomial);
                    REQUIRE(d.has_value());
                    CHECK(*d == cls.max_dimension);
                    CHECK(cls.signed_sum == (cls.inversions.empty() ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("the shape needs f nondecreasing")
{
    const auto x = WeightSequence::identity();
    const Word f{2, 1, 1};
    bool found = false;
    for (const auto &cls : inversion_classes_above(x, f)) {
        if (cls.inversions == inversion_set(Word{3, 2, 1})) {
            found = true;
            CHECK(cls.members == std::vector<Word>{{2, 2, 1}, {3, 1, 1}, {3, 2, 1}});
            CHECK(cls.polynomial == DimensionPolynomial{1, 2});
            CHECK_FALSE(binomial_shape(cls.polynomial).has_value());
        }
    }
    CHECK(found);
    // The identity itself does not depend on it.
    CHECK(verify_inclusion_exclusion(x, 3).ok);
}

TEST_CASE("preconditions")
{
    const auto flat = WeightSequence::parse("ceil((m+1)/3)");
    CHECK_THROWS_AS(verify_inclusion_exclusion(flat, 3), not_strictly_increasing);
    InclusionExclusionOptions opts;
    opts.allow_non_injective = true;
    const auto r = verify_inclusion_exclusion(flat, 3, opts);
    CHECK_FALSE(r.injective);
    CHECK_FALSE(r.collisions.empty());

    CHECK_THROWS_AS(verify_inclusion_exclusion(WeightSequence::parse("m-1"), 2), not_strictly_increasing);

    InclusionExclusionOptions tight;
    tight.budget = 10;
    CHECK_THROWS_AS(verify_inclusion_exclusion(WeightSequence::parse("m^2"), 4, tight), budget_exceeded);
}
