#include "parkfun/characteristic.hpp"

#include <map>
#include <tuple>

#include "parkfun/error.hpp"

namespace parkfun {

std::string method_name(CharMethod m)
{
    switch (m) {
    case CharMethod::recursive:
        return "recursive";
    case CharMethod::gamma:
        return "gamma";
    case CharMethod::lambda_direct:
        return "lambda-direct";
    case CharMethod::g_candidate:
        return "g-candidate";
    }
    return "?";
}

namespace {

using MemoKey = std::tuple<std::size_t, std::size_t, std::size_t>;

NSymPoly ncch_rec(const WeightSequence &x, std::size_t n, std::map<MemoKey, NSymPoly> &memo)
{
    if (n == 0) {
        return NSymPoly::unit(Basis::S);
    }
    const auto st = x.shift_state();
    const MemoKey key{st.offset, st.anchor, n};
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const BigInt first = x(1);
    NSymPoly out(Basis::S);
    if (first != 0) {
        for (std::size_t m = 1; m <= n; ++m) {
            const NSymPoly head = adams_scale(NSymPoly::monomial(Basis::S, Composition{m}), first);
            out += product(head, ncch_rec(x.shifted(m), n - m, memo));
        }
    }
    memo.emplace(key, out);
    return out;
}

} // namespace

NSymPoly ncch_recursive(const WeightSequence &x, std::size_t n)
{
    std::map<MemoKey, NSymPoly> memo;
    return ncch_rec(x, n, memo);
}

BigInt gamma(const WeightSequence &x, const Composition &pi)
{
    BigInt total = 0;
    for (const auto &tau : compositions_of(pi.length())) {
        BigInt prod = 1;
        for (std::size_t i = 1; i <= tau.length() && prod != 0; ++i) {
            prod *= binomial(psi(x, pi, tau, i), static_cast<std::int64_t>(tau[i - 1]));
        }
        total += prod;
    }
    return total;
}

NSymPoly ncch_gamma(const WeightSequence &x, std::size_t n)
{
    NSymPoly out(Basis::S);
    for (const auto &pi : compositions_of(n)) {
        out.add_term(pi, gamma(x, pi));
    }
    return out;
}

NSymPoly ncch_lambda_direct(const WeightSequence &x, std::size_t n)
{
    NSymPoly out(Basis::L);
    for (const auto &pi : compositions_of(n)) {
        BigInt coeff = 0;
        for (const auto &tau : compositions_of(pi.length())) {
            BigInt prod = ((n - tau.length()) % 2 == 0) ? 1 : -1;
            for (std::size_t i = 1; i <= tau.length() && prod != 0; ++i) {
                const BigInt top = x(1 + pi.partial_sum(tau.partial_sum(i - 1)));
                prod *= binomial(top, static_cast<std::int64_t>(tau[i - 1]));
            }
            coeff += prod;
        }
        out.add_term(pi, coeff);
    }
    return out;
}

bool check_scaling_lift(const WeightSequence &xbar, const BigInt &alpha, std::size_t n)
{
    return ncch_gamma(xbar.scaled(alpha), n) == adams_scale(ncch_gamma(xbar, n), alpha);
}

NSymPoly g_characteristic(const WeightSequence &x, std::size_t n)
{
    NSymPoly out(Basis::L);
    for (const auto &pi : compositions_of(n)) {
        BigInt coeff = ((n - pi.length()) % 2 == 0) ? 1 : -1;
        for (std::size_t i = 1; i <= pi.length(); ++i) {
            coeff *= power(x(1 + pi.partial_sum(i - 1)), pi[i - 1]);
        }
        out.add_term(pi, coeff);
    }
    return out;
}

CharacteristicResult characteristic(const WeightSequence &x, std::size_t n, CharMethod method)
{
    CharacteristicResult r;
    r.n = n;
    r.sequence = x.describe();
    r.method = method;
    switch (method) {
    case CharMethod::recursive:
        r.poly = ncch_recursive(x, n);
        break;
    case CharMethod::gamma:
        r.poly = ncch_gamma(x, n);
        break;
    case CharMethod::lambda_direct:
        r.poly = ncch_lambda_direct(x, n);
        break;
    case CharMethod::g_candidate:
        r.poly = g_characteristic(x, n);
        break;
    }
    return r;
}

std::optional<RibbonWitness> first_negative_ribbon_coefficient(const WeightSequence &x, std::size_t n_max)
{
    for (std::size_t n = 1; n <= n_max; ++n) {
        const NSymPoly r = to_basis(g_characteristic(x, n), Basis::R);
        for (const auto &[pi, c] : r.terms()) {
            if (c < 0) {
                return RibbonWitness{n, pi, c};
            }
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> first_divergence_degree(const WeightSequence &x, std::size_t n_max)
{
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (lambda_to_s(g_characteristic(x, n)) != ncch_gamma(x, n)) {
            return n;
        }
    }
    return std::nullopt;
}

namespace {

// a_{lo} + ... + a_{hi}
std::string increment_sum(std::size_t lo, std::size_t hi)
{
    std::string s;
    for (std::size_t j = lo; j <= hi; ++j) {
        if (j != lo) s += " + ";
        s += "a_" + std::to_string(j);
    }
    return s;
}

} // namespace

std::string gamma_symbolic_latex(const Composition &pi)
{
    // Psi_tau(i) = x(1 + pi(tau(i-1))) - x(1 + pi(tau(i-2))) is the sum of
    // the increments a_{2 + pi(tau(i-2))} .. a_{1 + pi(tau(i-1))}; the
    // first factor is a_1.
    std::vector<std::string> terms;
    for (const auto &tau : compositions_of(pi.length())) {
        std::string term;
        for (std::size_t i = 1; i <= tau.length(); ++i) {
            const std::size_t lo = i == 1 ? 1 : 2 + pi.partial_sum(tau.partial_sum(i - 2));
            const std::size_t hi = i == 1 ? 1 : 1 + pi.partial_sum(tau.partial_sum(i - 1));
            const std::string arg = increment_sum(lo, hi);
            const bool compound = hi > lo;
            if (tau[i - 1] == 1) {
                term += compound ? "(" + arg + ")" : arg;
            } else {
                term += "\\binom{" + arg + "}{" + std::to_string(tau[i - 1]) + "}";
            }
        }
        terms.push_back(std::move(term));
    }
    std::string out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        if (t) out += " + ";
        out += terms[t];
    }
    return out;
}

std::string characteristic_table_latex(std::size_t n_max)
{
    std::string out = "\\begin{align*}\n";
    for (std::size_t n = 0; n <= n_max; ++n) {
        out += "  \\mathrm{ncch}(\\mathrm{PF}_{" + std::to_string(n) + "}(x)) &= ";
        if (n == 0) {
            out += "1";
        }
        const auto comps = compositions_of(n);
        // coarsest first, as in S^n, S^{n-1,1}, ...
        bool first = true;
        for (auto it = comps.rbegin(); n != 0 && it != comps.rend(); ++it) {
            const std::string g = gamma_symbolic_latex(*it);
            const bool single = g.find(" + ") == std::string::npos;
            std::string idx;
            for (std::size_t p : it->parts()) idx += std::to_string(p);
            if (!first) out += " + ";
            first = false;
            out += (single ? g : "\\left[" + g + "\\right]") + "S^{" + idx + "}";
        }
        out += n == n_max ? "\n" : " \\\\\n";
    }
    out += "\\end{align*}\n";
    return out;
}

} // namespace parkfun
