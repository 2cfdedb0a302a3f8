#include <doctest.h>

#include <vector>

#include "parkfun/error.hpp"
#include "parkfun/weights.hpp"

using namespace parkfun;

namespace {

std::vector<BigInt> prefix(const WeightSequence &x, std::size_t k)
{
    std::vector<BigInt> out;
    for (std::size_t m = 1; m <= k; ++m) {
        out.push_back(x(m));
    }
    return out;
}

std::vector<BigInt> ints(std::initializer_list<long long> v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("polynomial expressions")
{
    CHECK(prefix(WeightSequence::parse("m"), 5) == ints({1, 2, 3, 4, 5}));
    CHECK(prefix(WeightSequence::parse("m+1"), 3) == ints({2, 3, 4}));
    CHECK(prefix(WeightSequence::parse("2*m-1"), 4) == ints({1, 3, 5, 7}));
    CHECK(prefix(WeightSequence::parse("m^2-m+1"), 5) == ints({1, 3, 7, 13, 21}));
    CHECK(prefix(WeightSequence::parse("m^2+m"), 3) == ints({2, 6, 12}));
    CHECK(prefix(WeightSequence::parse(" 3 * ( m - 1 ) + 2 "), 3) == ints({2, 5, 8}));
    CHECK(prefix(WeightSequence::parse("-m+2*m"), 3) == ints({1, 2, 3}));
    CHECK(WeightSequence::parse("m^2+m").describe() == "m^2+m");
    CHECK(WeightSequence::parse("m^20")(2) == BigInt(1048576));
}

TEST_CASE("ceil quotient")
{
    const auto x = WeightSequence::parse("ceil((m+1)/3)");
    CHECK(prefix(x, 9) == ints({1, 1, 2, 2, 2, 3, 3, 3, 4}));
    CHECK(x.describe() == "ceil((m+1)/3)");
    CHECK_THROWS_AS(WeightSequence::parse("ceil(m/0)"), error);
}

TEST_CASE("explicit values with tail rule")
{
    const auto x = WeightSequence::parse("explicit:2,2,3,5,8,8,8,8,8,8,9 tail:+1/6");
    CHECK(prefix(x, 18) == ints({2, 2, 3, 5, 8, 8, 8, 8, 8, 8, 9, 9, 9, 9, 9, 9, 10, 10}));

    const auto primes = WeightSequence::parse("explicit:2,3,5,7,11,13");
    CHECK(primes(6) == 13);
    CHECK_THROWS_AS(primes(7), sequence_exhausted);

    const auto steps = WeightSequence::parse("explicit:1,2 tail:+3");
    CHECK(prefix(steps, 4) == ints({1, 2, 5, 8}));
}

TEST_CASE("malformed expressions")
{
    for (const char *bad : {"", "m m", "2m", "m+", "ceil(m/2", "explicit:", "explicit:1,x", "n+1", "m^", "(m"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(WeightSequence::parse(bad), parse_error);
    }
}

TEST_CASE("monotonicity is validated lazily")
{
    const auto x = WeightSequence::parse("5-m");
    CHECK(x(1) == 4);
    CHECK_THROWS_AS(x(6), monotonicity_violation);

    const auto y = WeightSequence::parse("explicit:3,2");
    CHECK(y(1) == 3);
    CHECK_THROWS_AS(y(2), monotonicity_violation);

    const auto z = WeightSequence::parse("m^2-4*m+5");
    CHECK_THROWS_AS(z(2), monotonicity_violation);
}

TEST_CASE("shift")
{
    const auto x = WeightSequence::parse("explicit:2,2,3,5,8,8,8,8,8,8,9 tail:+1/6");
    const auto s = x.shifted(4);
    CHECK(prefix(s, 8) == ints({6, 6, 6, 6, 6, 6, 7, 7}));
    CHECK(s.shift_state() == ShiftState{4, 1});
    CHECK(s.is_view());
    CHECK_FALSE(x.is_view());

    const auto m = WeightSequence::parse("m^2-m+1");
    for (std::size_t a = 1; a <= 4; ++a) {
        for (std::size_t b = 1; b <= 4; ++b) {
            const auto twice = m.shifted(a).shifted(b);
            const auto once = m.shifted(a + b);
            CHECK(twice.shift_state() == ShiftState{a + b, a + 1});
            CHECK(once.shift_state() == ShiftState{a + b, 1});
            for (std::size_t k = 1; k <= 6; ++k) {
                CHECK(twice(k) == m(a + b + k) - m(a + 1));
                CHECK(once(k) == m(a + b + k) - m(1));
            }
        }
    }
    CHECK_THROWS_AS(m.shifted(0), error);
}

TEST_CASE("scale")
{
    const auto x = WeightSequence::parse("m");
    const auto y = x.scaled(2);
    CHECK(prefix(y, 4) == ints({2, 4, 6, 8}));
    CHECK(y.scale() == 2);
    CHECK(prefix(y.shifted(1), 3) == prefix(x.shifted(1).scaled(2), 3));
    CHECK(y.describe() == "2*(m)");
}

TEST_CASE("strictly increasing prefix")
{
    CHECK(WeightSequence::parse("m").strictly_increasing_on(6));
    CHECK_FALSE(WeightSequence::parse("ceil((m+1)/3)").strictly_increasing_on(2));
    CHECK(WeightSequence::parse("ceil((m+1)/3)").strictly_increasing_on(1));
    CHECK(WeightSequence::identity()(7) == 7);
}

TEST_CASE("upsilon and psi")
{
    const auto x = WeightSequence::parse("m^2-m+1");
    const Composition pi{2, 1, 1};
    CHECK(upsilon(x, pi, 1) == 1);
    CHECK(upsilon(x, pi, 2) == x(3) - x(1));
    CHECK(upsilon(x, pi, 3) == x(4) - x(3));
    CHECK_THROWS_AS(upsilon(x, pi, 4), error);

    CHECK(psi(x, pi, Composition{1, 1, 1}, 2) == upsilon(x, pi, 2));
    CHECK(psi(x, pi, Composition{1, 1, 1}, 3) == upsilon(x, pi, 3));
    // tau = (2,1): second factor spans pi(tau(1)) = pi(2) = 3 back to pi(0).
    CHECK(psi(x, pi, Composition{2, 1}, 1) == x(1));
    CHECK(psi(x, pi, Composition{2, 1}, 2) == x(4) - x(1));
    CHECK(psi(x, pi, Composition{1, 2}, 2) == x(3) - x(1));
    CHECK_THROWS_AS(psi(x, pi, Composition{2, 2}, 1), error);
}
