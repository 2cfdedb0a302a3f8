#include "parkfun/serialize.hpp"

#include <algorithm>

#include "parkfun/error.hpp"

namespace parkfun {

using nlohmann::json;

json to_json(const Composition &c)
{
    return json(c.parts());
}

Composition composition_from_json(const json &j)
{
    if (!j.is_array()) {
        throw parse_error("composition must be a JSON array");
    }
    std::vector<std::size_t> parts;
    for (const auto &e : j) {
        if (!e.is_number_unsigned() || e.get<std::size_t>() == 0) {
            throw parse_error("composition parts must be positive integers");
        }
        parts.push_back(e.get<std::size_t>());
    }
    return Composition(std::move(parts));
}

json to_json(const NSymPoly &f)
{
    json terms = json::array();
    for (const auto &[c, v] : f.terms()) {
        terms.push_back({{"c", to_json(c)}, {"v", v.str()}});
    }
    return {{"basis", basis_name(f.basis())}, {"terms", terms}};
}

NSymPoly nsym_from_json(const json &j)
{
    try {
        NSymPoly f(parse_basis(j.at("basis").get<std::string>()));
        for (const auto &t : j.at("terms")) {
            f.add_term(composition_from_json(t.at("c")), parse_bigint(t.at("v").get<std::string>()));
        }
        return f;
    } catch (const json::exception &e) {
        throw parse_error(std::string("malformed polynomial JSON: ") + e.what());
    }
}

json to_json(const Word &w)
{
    return json(w);
}

Word word_from_json(const json &j)
{
    if (!j.is_array()) {
        throw parse_error("word must be a JSON array");
    }
    Word w;
    for (const auto &e : j) {
        if (!e.is_number_unsigned()) {
            throw parse_error("word letters must be nonnegative integers");
        }
        w.push_back(e.get<Letter>());
    }
    return w;
}

json to_json(const SetSequence &q)
{
    return json(q.blocks);
}

SetSequence set_sequence_from_json(const json &j)
{
    try {
        SetSequence q{j.get<std::vector<std::vector<std::size_t>>>()};
        for (auto &b : q.blocks) {
            std::sort(b.begin(), b.end());
        }
        to_word(q); // validates disjoint cover
        return q;
    } catch (const json::exception &e) {
        throw parse_error(std::string("malformed set sequence JSON: ") + e.what());
    }
}

json to_json(const SignedFormalSum &s)
{
    json terms = json::array();
    for (const auto &[w, c] : s.terms()) {
        terms.push_back({{"word", to_json(w)}, {"v", c.str()}});
    }
    return terms;
}

json to_json(const InclusionExclusionReport &r)
{
    json offending = json::array();
    for (const auto &[w, c] : r.offending) {
        offending.push_back({{"word", to_json(w)}, {"v", c.str()}});
    }
    json collisions = json::array();
    for (const auto &w : r.collisions) {
        collisions.push_back(to_json(w));
    }
    return {{"n", r.n},
            {"sequence", r.sequence},
            {"ok", r.ok},
            {"parking_functions", r.parking_functions},
            {"primitives", r.primitives},
            {"injective", r.injective},
            {"offending", offending},
            {"collisions", collisions}};
}

} // namespace parkfun
