#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "parkfun/bigint.hpp"
#include "parkfun/compositions.hpp"
#include "parkfun/parking.hpp"
#include "parkfun/weights.hpp"

namespace parkfun {

enum class CountMethod { recursive, closed, brute };
enum class CountKind { structures, types };

std::string method_name(CountMethod m);
std::string kind_name(CountKind k);
CountMethod parse_count_method(const std::string &s);
CountKind parse_count_kind(const std::string &s);

struct CountReport {
    std::string sequence;
    std::size_t n = 0;
    std::string method;
    BigInt value;
};

// Number of x-parking functions of size n.
//   recursive: S(x;n) = sum_{k=1..n} binom(n,k) x(1)^k S(shift(x,k); n-k)
//   closed:    sum_{pi |= n} binom(n; pi) prod_i Upsilon(x;pi,i)^{pi_i}
//   brute:     |enumerate_structures(x, n)|
BigInt count_structures(const WeightSequence &x, std::size_t n, CountMethod method = CountMethod::recursive,
                        std::size_t budget = default_budget);

// Number of nondecreasing x-parking functions of size n.
//   recursive: T(x;n) = sum_{k=1..n} binom(k + x(1) - 1, x(1) - 1) T(shift(x,k); n-k)
//   closed:    sum_{pi |= n} prod_i binom(pi_i + U_i - 1, U_i - 1), U_i = Upsilon(x;pi,i)
//   brute:     |enumerate_types(x, n)|
BigInt count_types(const WeightSequence &x, std::size_t n, CountMethod method = CountMethod::recursive,
                   std::size_t budget = default_budget);

BigInt count(const WeightSequence &x, std::size_t n, CountKind kind, CountMethod method,
             std::size_t budget = default_budget);

CountReport count_report(const WeightSequence &x, std::size_t n, CountKind kind, CountMethod method,
                         std::size_t budget = default_budget);

// sum_{pi |= n} (-1)^{n - l(pi)} binom(n; pi) prod_i x(1 + pi(i-1))^{pi_i}
BigInt count_ky_alternating(const WeightSequence &x, std::size_t n);

// sum_{k=0..n} (-1)^{n-k+1} binom(n,k) S(x;k) x(k+1)^{n-k}; zero for n >= 1.
// Returned raw so that a failure shows the discrepancy.
BigInt zero_sum_identity(const WeightSequence &x, std::size_t n);

// Nondecreasing x-parking functions of size |pi| that are constant on each
// consecutive block of positions given by the parts of pi (brute force).
BigInt lambda_combi_count(const WeightSequence &x, const Composition &pi, std::size_t budget = default_budget);

struct TableRow {
    std::string label;
    std::vector<BigInt> values; // n = 0..n_max
    std::string oeis;           // may be empty
};

std::vector<TableRow> count_table(CountKind kind, const std::vector<std::string> &expressions, std::size_t n_max);

// "x,0,1,...,K,OEIS" header then one line per row.
std::string render_csv(const std::vector<TableRow> &rows, std::size_t n_max);
std::string render_latex(const std::vector<TableRow> &rows, std::size_t n_max, const std::string &caption);

} // namespace parkfun
