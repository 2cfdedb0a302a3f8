#include "parkfun/counting.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "parkfun/error.hpp"

namespace parkfun {

std::string method_name(CountMethod m)
{
    switch (m) {
    case CountMethod::recursive:
        return "recursive";
    case CountMethod::closed:
        return "closed";
    case CountMethod::brute:
        return "brute";
    }
    return "?";
}

std::string kind_name(CountKind k)
{
    return k == CountKind::structures ? "structures" : "types";
}

CountMethod parse_count_method(const std::string &s)
{
    if (s == "recursive") return CountMethod::recursive;
    if (s == "closed") return CountMethod::closed;
    if (s == "brute") return CountMethod::brute;
    throw parse_error("unknown method '" + s + "'");
}

CountKind parse_count_kind(const std::string &s)
{
    if (s == "structures") return CountKind::structures;
    if (s == "types") return CountKind::types;
    throw parse_error("unknown kind '" + s + "'");
}

namespace {

using MemoKey = std::tuple<std::size_t, std::size_t, std::size_t>;

// Shared shape of both recursions: F(x;n) = sum_k weight(x(1), n, k) F(shift(x,k); n-k).
template <class Weight>
BigInt recurse(const WeightSequence &x, std::size_t n, std::map<MemoKey, BigInt> &memo, const Weight &weight)
{
    if (n == 0) {
        return 1;
    }
    const auto st = x.shift_state();
    const MemoKey key{st.offset, st.anchor, n};
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const BigInt first = x(1);
    BigInt total = 0;
    for (std::size_t k = 1; k <= n && first != 0; ++k) {
        const BigInt w = weight(first, n, k);
        if (w != 0) {
            total += w * recurse(x.shifted(k), n - k, memo, weight);
        }
    }
    memo.emplace(key, total);
    return total;
}

} // namespace

BigInt count_structures(const WeightSequence &x, std::size_t n, CountMethod method, std::size_t budget)
{
    switch (method) {
    case CountMethod::recursive: {
        std::map<MemoKey, BigInt> memo;
        return recurse(x, n, memo, [](const BigInt &first, std::size_t total, std::size_t k) {
            return binomial(BigInt(total), static_cast<std::int64_t>(k)) * power(first, k);
        });
    }
    case CountMethod::closed: {
        BigInt total = 0;
        for (const auto &pi : compositions_of(n)) {
            BigInt term = multinomial(pi.parts());
            for (std::size_t i = 1; i <= pi.length() && term != 0; ++i) {
                term *= power(upsilon(x, pi, i), pi[i - 1]);
            }
            total += term;
        }
        return total;
    }
    case CountMethod::brute:
        return enumerate_structures(x, n, budget).size();
    }
    return 0;
}

BigInt count_types(const WeightSequence &x, std::size_t n, CountMethod method, std::size_t budget)
{
    switch (method) {
    case CountMethod::recursive: {
        std::map<MemoKey, BigInt> memo;
        return recurse(x, n, memo, [](const BigInt &first, std::size_t, std::size_t k) {
            // binom(k + x(1) - 1, x(1) - 1), written with the small lower index
            return binomial(first + k - 1, static_cast<std::int64_t>(k));
        });
    }
    case CountMethod::closed: {
        BigInt total = 0;
        for (const auto &pi : compositions_of(n)) {
            BigInt term = 1;
            for (std::size_t i = 1; i <= pi.length() && term != 0; ++i) {
                const BigInt u = upsilon(x, pi, i);
                term *= u == 0 ? BigInt(0) : binomial(u + pi[i - 1] - 1, static_cast<std::int64_t>(pi[i - 1]));
            }
            total += term;
        }
        return total;
    }
    case CountMethod::brute:
        return enumerate_types(x, n, budget).size();
    }
    return 0;
}

BigInt count(const WeightSequence &x, std::size_t n, CountKind kind, CountMethod method, std::size_t budget)
{
    return kind == CountKind::structures ? count_structures(x, n, method, budget)
                                         : count_types(x, n, method, budget);
}

CountReport count_report(const WeightSequence &x, std::size_t n, CountKind kind, CountMethod method,
                         std::size_t budget)
{
    return CountReport{x.describe(), n, kind_name(kind) + "/" + method_name(method),
                       count(x, n, kind, method, budget)};
}

BigInt count_ky_alternating(const WeightSequence &x, std::size_t n)
{
    BigInt total = 0;
    for (const auto &pi : compositions_of(n)) {
        BigInt term = multinomial(pi.parts());
        if ((n - pi.length()) % 2 != 0) {
            term = -term;
        }
        for (std::size_t i = 1; i <= pi.length(); ++i) {
            term *= power(x(1 + pi.partial_sum(i - 1)), pi[i - 1]);
        }
        total += term;
    }
    return total;
}

BigInt zero_sum_identity(const WeightSequence &x, std::size_t n)
{
    BigInt total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        BigInt term = binomial(BigInt(n), static_cast<std::int64_t>(k)) * count_structures(x, k)
                      * power(x(k + 1), n - k);
        total += ((n - k + 1) % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

BigInt lambda_combi_count(const WeightSequence &x, const Composition &pi, std::size_t budget)
{
    std::size_t hits = 0;
    for (const auto &w : enumerate_types(x, pi.size(), budget)) {
        bool constant = true;
        for (std::size_t b = 0; b < pi.length() && constant; ++b) {
            const std::size_t lo = pi.partial_sum(b);
            const std::size_t hi = pi.partial_sum(b + 1);
            constant = std::all_of(w.begin() + static_cast<std::ptrdiff_t>(lo),
                                   w.begin() + static_cast<std::ptrdiff_t>(hi),
                                   [&](Letter v) { return v == w[lo]; });
        }
        hits += constant ? 1 : 0;
    }
    return hits;
}

std::vector<TableRow> count_table(CountKind kind, const std::vector<std::string> &expressions, std::size_t n_max)
{
    std::vector<TableRow> rows;
    for (const auto &expr : expressions) {
        const auto x = WeightSequence::parse(expr);
        TableRow row;
        row.label = x.describe();
        for (std::size_t n = 0; n <= n_max; ++n) {
            row.values.push_back(count(x, n, kind, CountMethod::recursive));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_csv(const std::vector<TableRow> &rows, std::size_t n_max)
{
    std::string out = "x";
    for (std::size_t n = 0; n <= n_max; ++n) {
        out += "," + std::to_string(n);
    }
    out += ",OEIS\n";
    for (const auto &row : rows) {
        const bool quote = row.label.find(',') != std::string::npos;
        out += quote ? "\"" + row.label + "\"" : row.label;
        for (const auto &v : row.values) {
            out += "," + v.str();
        }
        out += "," + row.oeis + "\n";
    }
    return out;
}

std::string render_latex(const std::vector<TableRow> &rows, std::size_t n_max, const std::string &caption)
{
    std::string out = "\\begin{table}\n\\caption{" + caption + "}\n\\begin{center}\n$\\begin{array}{c||";
    out += std::string(n_max + 1, 'c') + "||c}\n    x\\backslash n";
    for (std::size_t n = 0; n <= n_max; ++n) {
        out += " & " + std::to_string(n);
    }
    out += " & \\text{OEIS}\\\\ \\hline\n";
    for (const auto &row : rows) {
        out += "    " + row.label;
        for (const auto &v : row.values) {
            out += " & " + v.str();
        }
        out += " & " + row.oeis + "\\\\\n";
    }
    out += "\\end{array}$\n\\end{center}\n\\end{table}\n";
    return out;
}

} // namespace parkfun
