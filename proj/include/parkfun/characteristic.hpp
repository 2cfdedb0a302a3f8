#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "parkfun/bigint.hpp"
#include "parkfun/compositions.hpp"
#include "parkfun/nsym.hpp"
#include "parkfun/weights.hpp"

namespace parkfun {

enum class CharMethod { recursive, gamma, lambda_direct, g_candidate };

std::string method_name(CharMethod m);

struct CharacteristicResult {
    std::size_t n = 0;
    std::string sequence;
    NSymPoly poly;
    CharMethod method = CharMethod::gamma;
};

// ncch(PF_n(x)) from the functional equation
//   ncch(PF_n(x)) = sum_{m=1..n} S_m(x(1) A) . ncch(PF_{n-m}(shift(x, m))),
// memoized on (shift state, degree). S basis.
NSymPoly ncch_recursive(const WeightSequence &x, std::size_t n);

// gamma_pi = sum_{tau |= l(pi)} prod_i binom(Psi_tau(x; pi, i), tau_i)
BigInt gamma(const WeightSequence &x, const Composition &pi);

// sum_{pi |= n} gamma_pi S^pi
NSymPoly ncch_gamma(const WeightSequence &x, std::size_t n);

// Coefficient of Lambda^pi:
//   sum_{tau |= l(pi)} (-1)^{n - l(tau)} prod_i binom(x(1 + pi(tau(i-1))), tau_i)
NSymPoly ncch_lambda_direct(const WeightSequence &x, std::size_t n);

// ncch_gamma(alpha * xbar, n) == adams_scale(ncch_gamma(xbar, n), alpha),
// both sides computed independently.
bool check_scaling_lift(const WeightSequence &xbar, const BigInt &alpha, std::size_t n);

// G(x; n) = sum_{pi |= n} (-1)^{n - l(pi)} prod_i x(1 + pi(i-1))^{pi_i} Lambda^pi.
// Its exponential specialization is the alternating structure count.
NSymPoly g_characteristic(const WeightSequence &x, std::size_t n);

CharacteristicResult characteristic(const WeightSequence &x, std::size_t n, CharMethod method);

struct RibbonWitness {
    std::size_t n = 0;
    Composition composition;
    BigInt coefficient;
};

// Smallest n <= n_max (then first composition in order) at which G(x; n)
// has a negative ribbon coefficient.
std::optional<RibbonWitness> first_negative_ribbon_coefficient(const WeightSequence &x, std::size_t n_max);

// Smallest n <= n_max at which G(x; n) differs from ncch(PF_n(x)).
std::optional<std::size_t> first_divergence_degree(const WeightSequence &x, std::size_t n_max);

// gamma_pi written symbolically for x(m) = a_1 + ... + a_m, e.g.
// "\binom{a_1}{2} + a_1(a_2 + a_3)".
std::string gamma_symbolic_latex(const Composition &pi);

// align* block listing ncch(PF_n(x)) for n = 0..n_max with symbolic
// coefficients in the increments a_m = x(m) - x(m-1).
std::string characteristic_table_latex(std::size_t n_max);

} // namespace parkfun
