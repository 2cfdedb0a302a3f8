#include "parkfun/nsym.hpp"

#include <functional>
#include <vector>

#include "parkfun/error.hpp"

namespace parkfun {

std::string basis_name(Basis b)
{
    switch (b) {
    case Basis::S:
        return "S";
    case Basis::R:
        return "R";
    case Basis::L:
        return "L";
    }
    return "?";
}

Basis parse_basis(const std::string &name)
{
    if (name == "S") return Basis::S;
    if (name == "R") return Basis::R;
    if (name == "L") return Basis::L;
    throw parse_error("unknown basis '" + name + "' (expected S, R or L)");
}

NSymPoly::NSymPoly(Basis basis, Terms terms) : basis_(basis)
{
    for (auto &[c, v] : terms) {
        add_term(c, v);
    }
}

NSymPoly NSymPoly::monomial(Basis basis, const Composition &c, const BigInt &coeff)
{
    NSymPoly p(basis);
    p.add_term(c, coeff);
    return p;
}

BigInt NSymPoly::coefficient(const Composition &c) const
{
    auto it = terms_.find(c);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void NSymPoly::add_term(const Composition &c, const BigInt &coeff)
{
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

std::optional<std::size_t> NSymPoly::degree() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    const std::size_t d = terms_.begin()->first.size();
    if (terms_.rbegin()->first.size() != d) {
        throw mixed_degree("polynomial mixes degrees " + std::to_string(d) + " and "
                           + std::to_string(terms_.rbegin()->first.size()));
    }
    return d;
}

NSymPoly &NSymPoly::operator+=(const NSymPoly &other)
{
    if (other.basis_ != basis_) {
        throw basis_mismatch("cannot add " + basis_name(other.basis_) + " to " + basis_name(basis_));
    }
    for (const auto &[c, v] : other.terms_) {
        add_term(c, v);
    }
    return *this;
}

NSymPoly &NSymPoly::operator-=(const NSymPoly &other)
{
    return *this += -other;
}

NSymPoly &NSymPoly::operator*=(const BigInt &k)
{
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[c, v] : terms_) {
        v *= k;
    }
    return *this;
}

NSymPoly NSymPoly::operator-() const
{
    NSymPoly out = *this;
    for (auto &[c, v] : out.terms_) {
        v = -v;
    }
    return out;
}

namespace {

void require_basis(const NSymPoly &f, Basis b, const char *op)
{
    if (f.basis() != b) {
        throw basis_mismatch(std::string(op) + " expects basis " + basis_name(b) + ", got " + basis_name(f.basis()));
    }
}

// Replaces every generator index by the image of each of its parts and
// multiplies the images out (valid for the multiplicative bases S and L).
NSymPoly expand_multiplicative(const NSymPoly &f, Basis target,
                               const std::function<NSymPoly::Terms(std::size_t)> &part_image)
{
    std::map<std::size_t, NSymPoly::Terms> cache;
    auto image = [&](std::size_t part) -> const NSymPoly::Terms & {
        auto it = cache.find(part);
        if (it == cache.end()) {
            it = cache.emplace(part, part_image(part)).first;
        }
        return it->second;
    };

    NSymPoly out(target);
    for (const auto &[pi, coeff] : f.terms()) {
        NSymPoly::Terms acc{{Composition(), coeff}};
        for (std::size_t part : pi.parts()) {
            NSymPoly::Terms next;
            for (const auto &[head, hc] : acc) {
                for (const auto &[tail, tc] : image(part)) {
                    next[head.concat(tail)] += hc * tc;
                }
            }
            acc = std::move(next);
        }
        for (const auto &[c, v] : acc) {
            out.add_term(c, v);
        }
    }
    return out;
}

NSymPoly::Terms alternating_compositions(std::size_t m)
{
    NSymPoly::Terms t;
    for (const auto &rho : compositions_of(m)) {
        t[rho] = ((m - rho.length()) % 2 == 0) ? 1 : -1;
    }
    return t;
}

} // namespace

NSymPoly product(const NSymPoly &f, const NSymPoly &g)
{
    if (f.basis() != g.basis() || f.basis() == Basis::R) {
        throw basis_mismatch("product needs both operands in the S basis or both in the L basis");
    }
    NSymPoly out(f.basis());
    for (const auto &[a, ca] : f.terms()) {
        for (const auto &[b, cb] : g.terms()) {
            out.add_term(a.concat(b), ca * cb);
        }
    }
    return out;
}

NSymPoly s_to_ribbon(const NSymPoly &f)
{
    require_basis(f, Basis::S, "s_to_ribbon");
    NSymPoly out(Basis::R);
    for (const auto &[pi, c] : f.terms()) {
        for (const auto &tau : coarsenings(pi)) {
            out.add_term(tau, c);
        }
    }
    return out;
}

NSymPoly ribbon_to_s(const NSymPoly &f)
{
    require_basis(f, Basis::R, "ribbon_to_s");
    NSymPoly out(Basis::S);
    for (const auto &[pi, c] : f.terms()) {
        for (const auto &tau : coarsenings(pi)) {
            out.add_term(tau, (pi.length() - tau.length()) % 2 == 0 ? c : BigInt(-c));
        }
    }
    return out;
}

NSymPoly s_to_lambda(const NSymPoly &f)
{
    require_basis(f, Basis::S, "s_to_lambda");
    return expand_multiplicative(f, Basis::L, alternating_compositions);
}

NSymPoly lambda_to_s(const NSymPoly &f)
{
    require_basis(f, Basis::L, "lambda_to_s");
    return expand_multiplicative(f, Basis::S, alternating_compositions);
}

NSymPoly ribbon_to_lambda(const NSymPoly &f)
{
    require_basis(f, Basis::R, "ribbon_to_lambda");
    NSymPoly out(Basis::L);
    for (const auto &[pi, c] : f.terms()) {
        const Composition comp = complement(pi);
        for (const auto &tau : coarsenings(comp)) {
            out.add_term(tau, (comp.length() - tau.length()) % 2 == 0 ? c : BigInt(-c));
        }
    }
    return out;
}

NSymPoly to_basis(const NSymPoly &f, Basis target)
{
    if (f.basis() == target) {
        return f;
    }
    switch (f.basis()) {
    case Basis::S:
        return target == Basis::R ? s_to_ribbon(f) : s_to_lambda(f);
    case Basis::R:
        return target == Basis::S ? ribbon_to_s(f) : ribbon_to_lambda(f);
    case Basis::L:
        return target == Basis::S ? lambda_to_s(f) : s_to_ribbon(lambda_to_s(f));
    }
    return f;
}

NSymPoly adams_scale(const NSymPoly &f, const BigInt &k)
{
    require_basis(f, Basis::S, "adams_scale");
    if (k < 0) {
        throw error("adams_scale: k must be nonnegative");
    }
    return expand_multiplicative(f, Basis::S, [&k](std::size_t n) {
        NSymPoly::Terms t;
        for (const auto &sigma : compositions_of(n)) {
            BigInt b = binomial(k, static_cast<std::int64_t>(sigma.length()));
            if (b != 0) {
                t[sigma] = std::move(b);
            }
        }
        return t;
    });
}

BigInt specialize_exponential(const NSymPoly &f)
{
    if (f.basis() == Basis::R) {
        return specialize_exponential(ribbon_to_s(f));
    }
    f.degree(); // homogeneity check
    BigInt total = 0;
    for (const auto &[pi, c] : f.terms()) {
        total += c * multinomial(pi.parts());
    }
    return total;
}

BigInt specialize_types(const NSymPoly &f)
{
    const NSymPoly s = to_basis(f, Basis::S);
    BigInt total = 0;
    for (const auto &[pi, c] : s.terms()) {
        total += c;
    }
    return total;
}

namespace {

template <class Emit>
std::string join_terms(const NSymPoly &f, Emit emit_generator, const char *times)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[pi, c] : f.terms()) {
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (first) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (mag != 1) {
            out += mag.str() + times;
        }
        out += emit_generator(pi);
    }
    return out;
}

} // namespace

std::string to_text(const NSymPoly &f)
{
    const std::string name = basis_name(f.basis());
    return join_terms(
        f, [&](const Composition &pi) { return name + pi.to_string(); }, "*");
}

std::string to_latex(const NSymPoly &f)
{
    return join_terms(
        f,
        [&](const Composition &pi) {
            bool wide = false;
            for (std::size_t p : pi.parts()) {
                wide = wide || p > 9;
            }
            std::string idx;
            for (std::size_t i = 0; i < pi.length(); ++i) {
                if (wide && i) idx += ',';
                idx += std::to_string(pi[i]);
            }
            switch (f.basis()) {
            case Basis::S:
                return "S^{" + idx + "}";
            case Basis::R:
                return "R_{" + idx + "}";
            case Basis::L:
                return "\\Lambda^{" + idx + "}";
            }
            return idx;
        },
        "");
}

} // namespace parkfun
