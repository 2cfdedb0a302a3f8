#include "parkfun/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "parkfun/characteristic.hpp"
#include "parkfun/counting.hpp"
#include "parkfun/error.hpp"
#include "parkfun/inclexcl.hpp"
#include "parkfun/oeis.hpp"
#include "parkfun/parking.hpp"
#include "parkfun/serialize.hpp"

namespace parkfun::cli {

std::size_t budget_from_environment()
{
    const char *env = std::getenv("PARKFUN_BUDGET");
    if (env == nullptr || *env == '\0') {
        return default_budget;
    }
    const BigInt v = parse_bigint(env);
    if (v <= 0 || v > std::numeric_limits<std::size_t>::max()) {
        throw parse_error(std::string("PARKFUN_BUDGET must be a positive integer, got '") + env + "'");
    }
    return v.convert_to<std::size_t>();
}

std::vector<std::string> split_list(const std::string &text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = item.find_last_not_of(" \t");
        out.push_back(item.substr(first, last - first + 1));
    }
    return out;
}

namespace {

enum class Status { pass, fail, skip, info };

struct Line {
    Status status;
    std::string text;
};

struct Cell {
    std::string label;
    std::function<std::vector<Line>()> run;
};

// Runs cells on a small pool; results come back in cell order.
std::vector<std::vector<Line>> run_cells(const std::vector<Cell> &cells)
{
    std::vector<std::vector<Line>> results(cells.size());
    std::atomic<std::size_t> next{0};
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(),
                                                                                cells.size()));
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                results[i] = cells[i].run();
            } catch (const budget_exceeded &e) {
                results[i].push_back({Status::skip, cells[i].label + ": " + e.what()});
            } catch (const std::exception &e) {
                results[i].push_back({Status::fail, cells[i].label + ": " + e.what()});
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w + 1 < workers; ++w) {
        pool.emplace_back(work);
    }
    work();
    for (auto &t : pool) {
        t.join();
    }
    return results;
}

Line check(bool ok, const std::string &what)
{
    return {ok ? Status::pass : Status::fail, what};
}

std::string cell_name(const char *suite, const WeightSequence &x, std::size_t n)
{
    return std::string(suite) + " x=" + x.describe() + " n=" + std::to_string(n);
}

std::vector<Line> counts_cell(const WeightSequence &x, std::size_t n, std::size_t budget)
{
    std::vector<Line> lines;
    const std::string name = cell_name("counts", x, n);
    for (CountKind kind : {CountKind::structures, CountKind::types}) {
        const BigInt rec = count(x, n, kind, CountMethod::recursive);
        const BigInt closed = count(x, n, kind, CountMethod::closed);
        lines.push_back(check(rec == closed, name + " " + kind_name(kind) + " recursive=" + rec.str()
                                                 + " closed=" + closed.str()));
        try {
            const BigInt brute = count(x, n, kind, CountMethod::brute, budget);
            lines.push_back(check(brute == rec, name + " " + kind_name(kind) + " brute=" + brute.str()));
        } catch (const budget_exceeded &e) {
            lines.push_back({Status::skip, name + " " + kind_name(kind) + " brute: " + e.what()});
        }
    }
    return lines;
}

std::vector<Line> bases_cell(const WeightSequence &x, std::size_t n)
{
    const std::string name = cell_name("bases", x, n);
    const NSymPoly rec = ncch_recursive(x, n);
    const NSymPoly gam = ncch_gamma(x, n);
    const NSymPoly lam = ncch_lambda_direct(x, n);
    std::vector<Line> lines;
    lines.push_back(check(rec == gam, name + " recursive == gamma"));
    lines.push_back(check(lambda_to_s(lam) == gam, name + " lambda-direct == gamma"));
    lines.push_back(check(ribbon_to_lambda(s_to_ribbon(gam)) == s_to_lambda(gam), name + " S->R->L == S->L"));
    const BigInt e = specialize_exponential(gam);
    const BigInt s = count_structures(x, n);
    lines.push_back(check(e == s, name + " exponential specialization " + e.str() + " vs structures " + s.str()));
    const BigInt t = specialize_types(gam);
    const BigInt tc = count_types(x, n);
    lines.push_back(check(t == tc, name + " type specialization " + t.str() + " vs types " + tc.str()));
    return lines;
}

std::vector<Line> hecke_cell(std::size_t n)
{
    std::vector<Line> lines;
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto r = check_hecke_relations(n, k);
        lines.push_back(check(r.ok, "hecke n=" + std::to_string(n) + " k=" + std::to_string(k) + " ("
                                        + std::to_string(r.basis_elements) + " basis elements)"
                                        + (r.ok ? "" : ": " + r.failure)));
    }
    return lines;
}

std::vector<Line> incexc_cell(const WeightSequence &x, std::size_t n, std::size_t budget)
{
    const std::string name = cell_name("incexc", x, n);
    if (n > 0 && x(1) < 1) {
        return {{Status::skip, name + ": x(1) = 0"}};
    }
    if (!x.strictly_increasing_on(n)) {
        return {{Status::skip, name + ": not strictly increasing"}};
    }
    std::vector<Line> lines;
    InclusionExclusionOptions opts;
    opts.budget = budget;
    const auto report = verify_inclusion_exclusion(x, n, opts);
    lines.push_back(check(report.ok, name + " coefficient map is the indicator of PF ("
                                         + std::to_string(report.parking_functions) + " functions, "
                                         + std::to_string(report.primitives) + " primitives)"
                                         + (report.ok ? "" : ": " + to_json(report).dump())));
    const BigInt signed_count = inclusion_exclusion_count(x, n);
    lines.push_back(check(signed_count == report.parking_functions, name + " signed primitive count " + signed_count.str()));
    bool shapes = true;
    std::string bad;
    for (const auto &f : enumerate_types(x, n, budget)) {
        for (const auto &cls : inversion_classes_above(x, f)) {
            const auto d = binomial_shape(cls.polynomial);
            const BigInt expected = cls.inversions.empty() ? 1 : 0;
            if (!d || *d != cls.max_dimension || cls.signed_sum != expected) {
                shapes = false;
                bad = word_to_string(f) + " class polynomial " + to_string(cls.polynomial);
            }
        }
    }
    lines.push_back(check(shapes, name + " inversion classes have shape (1+t)^d" + (shapes ? "" : ": " + bad)));
    return lines;
}

std::vector<Line> lift_cell(const WeightSequence &x, std::size_t n)
{
    std::vector<Line> lines;
    for (int alpha : {1, 2, 3}) {
        lines.push_back(check(check_scaling_lift(x, alpha, n),
                              cell_name("lift", x, n) + " alpha=" + std::to_string(alpha)));
    }
    return lines;
}

std::vector<Line> lambda_combi_cell(const WeightSequence &x, std::size_t n, std::size_t budget)
{
    const std::string name = cell_name("lambda-combi", x, n);
    const NSymPoly lam = ncch_lambda_direct(x, n);
    bool ok = true;
    std::string bad;
    for (const auto &pi : compositions_of(n)) {
        const BigInt c = lam.coefficient(pi);
        const BigInt brute = lambda_combi_count(x, pi, budget);
        const BigInt sign = (n - pi.length()) % 2 == 0 ? 1 : -1;
        if (c != sign * brute) {
            ok = false;
            bad = pi.to_string() + ": coefficient " + c.str() + ", count " + brute.str();
        }
    }
    return {check(ok, name + (ok ? "" : ": " + bad))};
}

std::vector<Line> zero_sum_cell(const WeightSequence &x, std::size_t n)
{
    const BigInt v = zero_sum_identity(x, n);
    return {check(v == 0, cell_name("zero-sum", x, n) + " value " + v.str())};
}

std::vector<Line> ky_cell(const WeightSequence &x, std::size_t n)
{
    const BigInt ky = count_ky_alternating(x, n);
    const BigInt s = count_structures(x, n);
    return {check(ky == s, cell_name("ky", x, n) + " alternating " + ky.str() + " vs " + s.str())};
}

std::vector<Line> ky_info_cell(const WeightSequence &x, std::size_t n_max)
{
    std::vector<Line> lines;
    const auto div = first_divergence_degree(x, n_max);
    lines.push_back({Status::info, "ky x=" + x.describe()
                                       + (div ? " G(x;n) first differs from ncch at n=" + std::to_string(*div)
                                              : " G(x;n) agrees with ncch for n <= " + std::to_string(n_max))});
    const auto w = first_negative_ribbon_coefficient(x, n_max);
    lines.push_back({Status::info, "ky x=" + x.describe() + " first negative ribbon coefficient of G: "
                                       + (w ? "n=" + std::to_string(w->n) + " R" + w->composition.to_string()
                                                  + " -> " + w->coefficient.str()
                                            : "none up to n=" + std::to_string(n_max))});
    return lines;
}

int cmd_verify(const std::string &suite, const std::string &seqs, std::size_t n_max, std::ostream &out)
{
    static const std::vector<std::string> suites{"counts", "bases",        "hecke",    "incexc", "lift",
                                                 "lambda-combi", "zero-sum", "ky"};
    std::vector<std::string> chosen;
    if (suite == "all") {
        chosen = suites;
    } else {
        chosen.push_back(suite);
    }
    const std::size_t budget = budget_from_environment();
    std::vector<WeightSequence> xs;
    for (const auto &e : split_list(seqs)) {
        xs.push_back(WeightSequence::parse(e));
    }

    std::vector<Cell> cells;
    for (const auto &s : chosen) {
        if (s == "hecke") {
            for (std::size_t n = 1; n <= n_max; ++n) {
                cells.push_back({"hecke n=" + std::to_string(n), [n] { return hecke_cell(n); }});
            }
            continue;
        }
        for (const auto &x : xs) {
            if (s == "ky") {
                cells.push_back({cell_name("ky", x, n_max), [x, n_max] { return ky_info_cell(x, n_max); }});
            }
            for (std::size_t n = 0; n <= n_max; ++n) {
                if (s == "counts") {
                    cells.push_back({cell_name("counts", x, n), [x, n, budget] { return counts_cell(x, n, budget); }});
                } else if (s == "bases") {
                    cells.push_back({cell_name("bases", x, n), [x, n] { return bases_cell(x, n); }});
                } else if (s == "incexc" && n >= 1) {
                    cells.push_back({cell_name("incexc", x, n), [x, n, budget] { return incexc_cell(x, n, budget); }});
                } else if (s == "lift") {
                    cells.push_back({cell_name("lift", x, n), [x, n] { return lift_cell(x, n); }});
                } else if (s == "lambda-combi" && n >= 1) {
                    cells.push_back({cell_name("lambda-combi", x, n), [x, n, budget] { return lambda_combi_cell(x, n, budget); }});
                } else if (s == "zero-sum" && n >= 1) {
                    cells.push_back({cell_name("zero-sum", x, n), [x, n] { return zero_sum_cell(x, n); }});
                } else if (s == "ky") {
                    cells.push_back({cell_name("ky", x, n), [x, n] { return ky_cell(x, n); }});
                }
            }
        }
    }

    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const auto &lines : run_cells(cells)) {
        for (const auto &line : lines) {
            switch (line.status) {
            case Status::pass:
                ++passed;
                out << "PASS " << line.text << '\n';
                break;
            case Status::fail:
                ++failed;
                out << "FAIL " << line.text << '\n';
                break;
            case Status::skip:
                ++skipped;
                out << "SKIP " << line.text << '\n';
                break;
            case Status::info:
                out << "INFO " << line.text << '\n';
                break;
            }
        }
    }
    out << "verify: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return failed == 0 ? exit_ok : exit_verification_failed;
}

int cmd_oeis(const std::string &id, const std::string &seq, const std::string &kind, const std::string &bfile,
             std::size_t offset, std::optional<std::size_t> n_max, std::ostream &out)
{
    OeisSnapshot snap;
    snap.add(id, read_bfile(bfile));
    const auto &data = snap.at(id);
    const auto x = WeightSequence::parse(seq);
    const CountKind k = parse_count_kind(kind);
    std::vector<BigInt> terms;
    for (std::size_t n = 0; n + offset < data.first_index + data.terms.size() && (!n_max || n <= *n_max); ++n) {
        terms.push_back(count(x, n, k, CountMethod::recursive));
    }
    const auto r = oeis_check(snap, id, terms, offset);
    if (r.match) {
        out << id << ": match over " << r.overlap << " terms\n";
        return exit_ok;
    }
    out << id << ": mismatch at n=" << *r.first_mismatch << ": expected " << r.expected << ", computed "
        << r.computed << '\n';
    return exit_verification_failed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Generalized parking functions: enumeration, noncommutative characteristics, verification",
                 "parkfun"};
    app.require_subcommand(1);

    std::string seq;
    std::string seqs;
    std::string rows;
    std::size_t n = 0;
    std::size_t n_max = 0;
    std::string kind = "structures";
    std::string method = "recursive";
    std::string basis;
    std::string format;
    std::string which;
    std::string oeis_path;
    std::string suite;
    std::string id;
    std::string bfile;

    auto *count_cmd = app.add_subcommand("count", "Count parking functions or their isomorphism types");
    count_cmd->add_option("--seq", seq, "Weight sequence expression")->required();
    count_cmd->add_option("--n", n, "Size")->required();
    count_cmd->add_option("--kind", kind)->check(CLI::IsMember({"structures", "types"}));
    count_cmd->add_option("--method", method)->check(CLI::IsMember({"recursive", "closed", "brute"}));

    auto *char_cmd = app.add_subcommand("char", "Noncommutative characteristic of PF_n(x)");
    char_cmd->add_option("--seq", seq, "Weight sequence expression")->required();
    char_cmd->add_option("--n", n, "Degree")->required();
    char_cmd->add_option("--basis", basis)->required()->check(CLI::IsMember({"S", "R", "L"}));
    char_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));

    auto *table_cmd = app.add_subcommand("table", "Enumeration tables");
    table_cmd->add_option("--which", which)->required()->check(
        CLI::IsMember({"structures", "types", "characteristic"}));
    table_cmd->add_option("--rows", rows, "Row expressions separated by ';'");
    table_cmd->add_option("--n-max", n_max)->required();
    table_cmd->add_option("--oeis", oeis_path, "OEIS snapshot directory or b-file");
    table_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "latex"}));

    auto *verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(
        {"all", "counts", "bases", "hecke", "incexc", "lift", "lambda-combi", "zero-sum", "ky"}));
    verify_cmd->add_option("--seqs", seqs, "Sequence expressions separated by ';'")->required();
    verify_cmd->add_option("--n-max", n_max)->required();

    auto *oeis_cmd = app.add_subcommand("oeis", "Compare counts against an OEIS b-file");
    oeis_cmd->add_option("--id", id)->required();
    oeis_cmd->add_option("--seq", seq)->required();
    oeis_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"structures", "types"}));
    oeis_cmd->add_option("--bfile", bfile)->required();
    std::size_t offset = 0;
    std::size_t oeis_n_max = 0;
    oeis_cmd->add_option("--offset", offset, "Compare size n with a(n + offset)");
    auto *oeis_n_max_opt = oeis_cmd->add_option("--n-max", oeis_n_max, "Largest size to compare");

    std::vector<std::string> argv_storage{"parkfun"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "parkfun: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*count_cmd) {
            const auto x = WeightSequence::parse(seq);
            out << count(x, n, parse_count_kind(kind), parse_count_method(method), budget_from_environment())
                << '\n';
            return exit_ok;
        }
        if (*char_cmd) {
            const auto x = WeightSequence::parse(seq);
            const NSymPoly f = to_basis(ncch_gamma(x, n), parse_basis(basis));
            if (format == "json") {
                out << to_json(f).dump() << '\n';
            } else if (format == "latex") {
                out << to_latex(f) << '\n';
            } else {
                out << to_text(f) << '\n';
            }
            return exit_ok;
        }
        if (*table_cmd) {
            if (which == "characteristic") {
                out << characteristic_table_latex(n_max);
                return exit_ok;
            }
            const auto exprs = split_list(rows);
            if (exprs.empty()) {
                err << "parkfun: table --which " << which << " needs --rows\n";
                return exit_usage;
            }
            const CountKind k = parse_count_kind(which);
            auto table = count_table(k, exprs, n_max);
            if (!oeis_path.empty()) {
                const auto snap = OeisSnapshot::load(oeis_path);
                for (auto &row : table) {
                    row.oeis = oeis_lookup(snap, row.values);
                }
            }
            if (format == "latex") {
                out << render_latex(table, n_max,
                                    k == CountKind::structures ? "Enumerations of parking-function structures"
                                                               : "Enumerations of parking-function types");
            } else {
                out << render_csv(table, n_max);
            }
            return exit_ok;
        }
        if (*verify_cmd) {
            return cmd_verify(suite, seqs, n_max, out);
        }
        if (*oeis_cmd) {
            return cmd_oeis(id, seq, kind, bfile, offset,
                            *oeis_n_max_opt ? std::optional<std::size_t>(oeis_n_max) : std::nullopt, out);
        }
    } catch (const std::exception &e) {
        err << "parkfun: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace parkfun::cli
