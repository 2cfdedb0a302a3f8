#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parkfun/bigint.hpp"
#include "parkfun/parking.hpp"
#include "parkfun/weights.hpp"

namespace parkfun {

struct InclusionExclusionOptions {
    std::size_t budget = default_budget;
    // Run even when x is not strictly increasing on [n]. Collisions of the
    // ordered-set-partition map are then reported instead of raising
    // not_injective; the sum runs over distinct primitive words.
    bool allow_non_injective = false;
};

struct InclusionExclusionReport {
    std::size_t n = 0;
    std::string sequence;
    // sum over primitives f of (-1)^{d(f)} sum_{q in PF_n(x), q <= f} q
    SignedFormalSum coefficients;
    std::size_t parking_functions = 0;
    std::size_t primitives = 0;
    // coefficients equals the indicator of PF_n(x)
    bool ok = false;
    // words whose coefficient is not 1
    std::vector<std::pair<Word, BigInt>> offending;
    bool injective = true;
    std::vector<Word> collisions;
};

// Throws not_strictly_increasing (unless allowed) and budget_exceeded.
InclusionExclusionReport verify_inclusion_exclusion(const WeightSequence &x, std::size_t n,
                                                    const InclusionExclusionOptions &options = {});

// Coefficients c_k of t^k.
using DimensionPolynomial = std::vector<BigInt>;

// sum over primitives p >= f with inv(p) = I of t^{d(p)}.
DimensionPolynomial dimension_polynomial(const WeightSequence &x, const Word &f, const InversionSet &inversions);

// d when poly equals (1+t)^d.
std::optional<std::size_t> binomial_shape(const DimensionPolynomial &poly);

std::string to_string(const DimensionPolynomial &poly);

struct InversionClass {
    InversionSet inversions;
    std::vector<Word> members;
    DimensionPolynomial polynomial;
    std::size_t max_dimension = 0;
    // sum of (-1)^{d(p)} over the class
    BigInt signed_sum;
};

// Primitives p >= f grouped by inversion set, classes in inversion-set order.
std::vector<InversionClass> inversion_classes_above(const WeightSequence &x, const Word &f);

// sum over primitives Q of (-1)^{d(Q)} prod_{i=1..n} x(i)^{#Q_{x(i)}}
BigInt inclusion_exclusion_count(const WeightSequence &x, std::size_t n);

} // namespace parkfun
