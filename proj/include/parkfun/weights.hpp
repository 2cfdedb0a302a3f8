#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parkfun/bigint.hpp"
#include "parkfun/compositions.hpp"

namespace parkfun {

namespace detail {
class SequenceSource;
}

// Continuation of an explicit prefix: after the last listed value v_L, the
// sequence holds each value for `period` indices and then grows by `step`,
// i.e. x(L + j) = v_L + step * floor(j / period).
struct TailRule {
    BigInt step = 1;
    std::size_t period = 1;
};

// Position of a view relative to its root sequence: the view evaluates
// m -> scale * (root(m + offset) - root(anchor)), with anchor 0 meaning no
// subtraction. A freshly shifted root has offset s and anchor 1.
struct ShiftState {
    std::size_t offset = 0;
    std::size_t anchor = 0;

    friend auto operator<=>(const ShiftState &, const ShiftState &) = default;
};

// A nondecreasing map x : N+ -> N.
//
// The root sequence is immutable and shared between all views derived from
// it by shifting or scaling. Root values are computed on demand and cached;
// nonnegativity and monotonicity are validated up to the largest index ever
// requested, so a bad parameter choice surfaces as monotonicity_violation
// at evaluation time.
class WeightSequence {
public:
    // sum_k coeffs[k] * m^k
    static WeightSequence polynomial(std::vector<BigInt> coeffs, std::string description = {});
    // ceil(P(m) / divisor), divisor > 0
    static WeightSequence ceil_quotient(std::vector<BigInt> numerator, BigInt divisor,
                                        std::string description = {});
    static WeightSequence explicit_values(std::vector<BigInt> values, std::optional<TailRule> tail = {},
                                          std::string description = {});
    static WeightSequence identity();

    // Parses the sequence mini-language: integer polynomials in `m`
    // ("m^2-m+1", "2*m-1"), "ceil(POLY/INT)", or
    // "explicit:v1,v2,... [tail:+STEP[/PERIOD]]".
    static WeightSequence parse(std::string_view expression);

    BigInt operator()(std::size_t m) const { return eval(m); }
    BigInt eval(std::size_t m) const;

    // m -> x(s + m) - x(1)
    WeightSequence shifted(std::size_t s) const;
    // m -> k * x(m)
    WeightSequence scaled(const BigInt &k) const;

    ShiftState shift_state() const noexcept { return state_; }
    const BigInt &scale() const noexcept { return scale_; }
    bool is_view() const noexcept { return state_.offset != 0 || state_.anchor != 0 || scale_ != 1; }

    // x(1) < x(2) < ... < x(n)
    bool strictly_increasing_on(std::size_t n) const;

    std::string describe() const;

private:
    WeightSequence(std::shared_ptr<const detail::SequenceSource> root, ShiftState state, BigInt scale);

    std::shared_ptr<const detail::SequenceSource> root_;
    ShiftState state_;
    BigInt scale_ = 1;
};

// Upsilon(x; pi, i), i in [1, length(pi)]:
//   x(1)                                 if i = 1
//   x(1 + pi(i-1)) - x(1 + pi(i-2))      otherwise
BigInt upsilon(const WeightSequence &x, const Composition &pi, std::size_t i);

// Psi_tau(x; pi, i), tau a composition of length(pi), i in [1, length(tau)]:
//   x(1)                                           if i = 1
//   x(1 + pi(tau(i-1))) - x(1 + pi(tau(i-2)))      otherwise
// With tau = (1,...,1) this is upsilon.
BigInt psi(const WeightSequence &x, const Composition &pi, const Composition &tau, std::size_t i);

} // namespace parkfun
