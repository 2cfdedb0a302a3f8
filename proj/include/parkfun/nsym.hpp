#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "parkfun/bigint.hpp"
#include "parkfun/compositions.hpp"

namespace parkfun {

// S: complete functions S^pi; R: ribbon Schur functions R_pi;
// L: elementary functions Lambda^pi.
enum class Basis { S, R, L };

std::string basis_name(Basis b);
Basis parse_basis(const std::string &name);

// A noncommutative symmetric function with integer coefficients, expanded in
// one of the three bases. Zero coefficients are never stored. Terms may span
// several degrees; specializations insist on homogeneity.
class NSymPoly {
public:
    using Terms = std::map<Composition, BigInt>;

    explicit NSymPoly(Basis basis = Basis::S) : basis_(basis) {}
    NSymPoly(Basis basis, Terms terms);

    static NSymPoly unit(Basis basis) { return monomial(basis, Composition(), 1); }
    static NSymPoly monomial(Basis basis, const Composition &c, const BigInt &coeff = 1);

    Basis basis() const noexcept { return basis_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    BigInt coefficient(const Composition &c) const;
    void add_term(const Composition &c, const BigInt &coeff);

    // Common degree of all terms; nullopt for the zero polynomial.
    // Throws mixed_degree otherwise.
    std::optional<std::size_t> degree() const;

    NSymPoly &operator+=(const NSymPoly &other);
    NSymPoly &operator-=(const NSymPoly &other);
    NSymPoly &operator*=(const BigInt &k);

    friend NSymPoly operator+(NSymPoly a, const NSymPoly &b) { return a += b; }
    friend NSymPoly operator-(NSymPoly a, const NSymPoly &b) { return a -= b; }
    friend NSymPoly operator*(NSymPoly a, const BigInt &k) { return a *= k; }
    NSymPoly operator-() const;

    friend bool operator==(const NSymPoly &, const NSymPoly &) = default;

private:
    Basis basis_;
    Terms terms_;
};

// Concatenation product S^a S^b = S^{a.b} (equally valid for Lambda, which
// is also multiplicative). Both operands must share the basis S or L.
NSymPoly product(const NSymPoly &f, const NSymPoly &g);

// S^pi = sum_{tau coarsening pi} R_tau
NSymPoly s_to_ribbon(const NSymPoly &f);
// R_pi = sum_{tau coarsening pi} (-1)^{l(pi) - l(tau)} S^tau
NSymPoly ribbon_to_s(const NSymPoly &f);

// Per part, S_m = sum_{rho |= m} (-1)^{m - l(rho)} Lambda^rho, extended
// multiplicatively. The same expansion with the roles exchanged gives the
// inverse.
NSymPoly s_to_lambda(const NSymPoly &f);
NSymPoly lambda_to_s(const NSymPoly &f);

// R_pi = sum_{tau coarsening c} (-1)^{l(c) - l(tau)} Lambda^tau, with c the
// complement of pi.
NSymPoly ribbon_to_lambda(const NSymPoly &f);

// Converts between any two bases.
NSymPoly to_basis(const NSymPoly &f, Basis target);

// Alphabet scaling A -> kA on an S-basis polynomial:
// S_n(kA) = sum_{sigma |= n} binom(k, l(sigma)) S^sigma, extended
// multiplicatively and linearly.
NSymPoly adams_scale(const NSymPoly &f, const BigInt &k);

// S^pi, Lambda^pi -> n! / (pi_1! ... pi_l!). Ribbon input is converted to S
// first. Throws mixed_degree for inhomogeneous input; zero maps to 0.
BigInt specialize_exponential(const NSymPoly &f);

// S^pi -> 1 (sum of S-basis coefficients). Other bases are converted to S.
BigInt specialize_types(const NSymPoly &f);

// "2*R[1,1] + 3*R[2]"; "0" for the zero polynomial.
std::string to_text(const NSymPoly &f);
// "2S^{11} + S^{2}", "3\Lambda^{11} - \Lambda^{2}", "2R_{11} + 3R_{2}".
// Parts are comma separated when any part exceeds 9.
std::string to_latex(const NSymPoly &f);

} // namespace parkfun
