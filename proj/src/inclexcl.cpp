#include "parkfun/inclexcl.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parkfun/error.hpp"

namespace parkfun {

namespace {

std::size_t face_dimension(const Word &f)
{
    return f.size() - std::set<Letter>(f.begin(), f.end()).size();
}

void require_strict(const WeightSequence &x, std::size_t n)
{
    if (n > 0 && (x(1) < 1 || !x.strictly_increasing_on(n))) {
        throw not_strictly_increasing("x = " + x.describe() + " is not positive and strictly increasing on ["
                                      + std::to_string(n) + "]");
    }
}

std::vector<Word> primitives_above(const WeightSequence &x, const Word &f)
{
    std::vector<Word> out;
    for (const auto &p : primitives(x, f.size())) {
        if (leq_pointwise(f, p)) {
            out.push_back(p);
        }
    }
    return out;
}

} // namespace

InclusionExclusionReport verify_inclusion_exclusion(const WeightSequence &x, std::size_t n,
                                                    const InclusionExclusionOptions &options)
{
    InclusionExclusionReport report;
    report.n = n;
    report.sequence = x.describe();

    std::vector<Word> prims;
    if (options.allow_non_injective) {
        std::map<Word, std::size_t> seen;
        for (const auto &[p, w] : primitive_preimages(x, n)) {
            if (++seen[w] == 2) {
                report.collisions.push_back(w);
            }
        }
        report.injective = report.collisions.empty();
        for (const auto &[w, cnt] : seen) {
            prims.push_back(w);
        }
    } else {
        require_strict(x, n);
        prims = primitives(x, n);
    }
    report.primitives = prims.size();

    const auto pfs = enumerate_structures(x, n, options.budget);
    report.parking_functions = pfs.size();

    // Every word below a parking function is a parking function, so summing
    // over q in PF_n(x) loses nothing as long as every primitive parks.
    for (const auto &p : prims) {
        if (!is_parking(p, x)) {
            report.offending.emplace_back(p, BigInt(0));
        }
    }

    std::vector<int> sign(prims.size());
    for (std::size_t j = 0; j < prims.size(); ++j) {
        sign[j] = face_dimension(prims[j]) % 2 == 0 ? 1 : -1;
    }
    for (const auto &q : pfs) {
        long long c = 0;
        for (std::size_t j = 0; j < prims.size(); ++j) {
            if (leq_pointwise(q, prims[j])) {
                c += sign[j];
            }
        }
        report.coefficients.add(q, c);
        if (c != 1) {
            report.offending.emplace_back(q, BigInt(c));
        }
    }
    report.ok = report.offending.empty() && report.injective;
    return report;
}

DimensionPolynomial dimension_polynomial(const WeightSequence &x, const Word &f, const InversionSet &inversions)
{
    require_strict(x, f.size());
    DimensionPolynomial poly;
    for (const auto &p : primitives_above(x, f)) {
        if (inversion_set(p) != inversions) {
            continue;
        }
        const std::size_t d = face_dimension(p);
        if (poly.size() <= d) {
            poly.resize(d + 1);
        }
        poly[d] += 1;
    }
    return poly;
}

std::optional<std::size_t> binomial_shape(const DimensionPolynomial &poly)
{
    if (poly.empty()) {
        return std::nullopt;
    }
    const std::size_t d = poly.size() - 1;
    for (std::size_t k = 0; k <= d; ++k) {
        if (poly[k] != binomial(BigInt(d), static_cast<std::int64_t>(k))) {
            return std::nullopt;
        }
    }
    return d;
}

std::string to_string(const DimensionPolynomial &poly)
{
    std::string out;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] == 0) {
            continue;
        }
        if (!out.empty()) out += " + ";
        const std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        if (mono.empty() || poly[k] != 1) {
            out += poly[k].str();
        }
        out += mono;
    }
    return out.empty() ? "0" : out;
}

std::vector<InversionClass> inversion_classes_above(const WeightSequence &x, const Word &f)
{
    require_strict(x, f.size());
    std::map<InversionSet, InversionClass> classes;
    for (const auto &p : primitives_above(x, f)) {
        auto inv = inversion_set(p);
        auto &cls = classes[inv];
        cls.inversions = std::move(inv);
        const std::size_t d = face_dimension(p);
        if (cls.polynomial.size() <= d) {
            cls.polynomial.resize(d + 1);
        }
        cls.polynomial[d] += 1;
        cls.max_dimension = std::max(cls.max_dimension, d);
        cls.signed_sum += d % 2 == 0 ? 1 : -1;
        cls.members.push_back(p);
    }
    std::vector<InversionClass> out;
    out.reserve(classes.size());
    for (auto &[inv, cls] : classes) {
        out.push_back(std::move(cls));
    }
    return out;
}

BigInt inclusion_exclusion_count(const WeightSequence &x, std::size_t n)
{
    require_strict(x, n);
    BigInt total = 0;
    for (const auto &q : primitives(x, n)) {
        BigInt term = face_dimension(q) % 2 == 0 ? 1 : -1;
        for (std::size_t i = 1; i <= n; ++i) {
            const Letter v = to_letter(x(i));
            term *= power(BigInt(v), static_cast<std::size_t>(std::count(q.begin(), q.end(), v)));
        }
        total += term;
    }
    return total;
}

} // namespace parkfun
