#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace parkfun {

using BigInt = boost::multiprecision::cpp_int;

// binom(top, k) for an arbitrary nonnegative top and a machine-size k.
// Negative top or negative k yields 0 (the combinatorial convention used by
// every count in this library).
BigInt binomial(const BigInt &top, std::int64_t k);

// n! / (parts[0]! parts[1]! ...), with n the sum of the parts.
BigInt multinomial(std::span<const std::size_t> parts);

BigInt power(const BigInt &base, std::size_t exponent);

inline std::string to_string(const BigInt &v) { return v.str(); }

BigInt parse_bigint(const std::string &text);

} // namespace parkfun
