#include "parkfun/oeis.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "parkfun/error.hpp"

namespace parkfun {

void OeisSnapshot::add(const std::string &id, OeisSequence seq)
{
    sequences_[id] = std::move(seq);
}

const OeisSequence &OeisSnapshot::at(const std::string &id) const
{
    auto it = sequences_.find(id);
    if (it == sequences_.end()) {
        throw unknown_id("OEIS id " + id + " not in snapshot");
    }
    return it->second;
}

namespace {

std::optional<std::string> id_from_filename(const std::filesystem::path &p)
{
    static const std::regex pattern(R"(^[Ab](\d{6})\.txt$)");
    std::smatch m;
    const std::string name = p.filename().string();
    if (std::regex_match(name, m, pattern)) {
        return "A" + m[1].str();
    }
    return std::nullopt;
}

} // namespace

OeisSnapshot OeisSnapshot::load(const std::filesystem::path &path)
{
    OeisSnapshot snap;
    if (std::filesystem::is_directory(path)) {
        for (const auto &entry : std::filesystem::directory_iterator(path)) {
            if (auto id = id_from_filename(entry.path())) {
                snap.add(*id, read_bfile(entry.path()));
            }
        }
        return snap;
    }
    auto id = id_from_filename(path);
    if (!id) {
        throw parse_error("cannot infer an OEIS id from file name " + path.string());
    }
    snap.add(*id, read_bfile(path));
    return snap;
}

OeisSequence parse_bfile(const std::string &text)
{
    OeisSequence seq;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string idx_text;
        std::string value_text;
        if (!(fields >> idx_text)) {
            continue;
        }
        std::string extra;
        if (!(fields >> value_text) || (fields >> extra)) {
            throw parse_error("b-file line " + std::to_string(lineno) + ": expected 'index value'");
        }
        const BigInt idx = parse_bigint(idx_text);
        if (idx < 0) {
            throw parse_error("b-file line " + std::to_string(lineno) + ": negative index");
        }
        const auto i = idx.convert_to<std::size_t>();
        if (first) {
            seq.first_index = i;
            first = false;
        } else if (i != seq.first_index + seq.terms.size()) {
            throw parse_error("b-file line " + std::to_string(lineno) + ": index " + idx_text
                              + " breaks contiguity");
        }
        seq.terms.push_back(parse_bigint(value_text));
    }
    return seq;
}

OeisSequence read_bfile(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw error("cannot open " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_bfile(buf.str());
}

OeisCheck oeis_check(const OeisSnapshot &snapshot, const std::string &id, const std::vector<BigInt> &computed,
                     std::size_t offset)
{
    const OeisSequence &seq = snapshot.at(id);
    OeisCheck result;
    result.match = true;
    for (std::size_t n = 0; n < computed.size(); ++n) {
        if (n + offset < seq.first_index) {
            continue;
        }
        const std::size_t i = n + offset - seq.first_index;
        if (i >= seq.terms.size()) {
            break;
        }
        ++result.overlap;
        const BigInt &expected = seq.terms[i];
        if (expected != computed[n]) {
            result.match = false;
            result.first_mismatch = n;
            result.expected = expected;
            result.computed = computed[n];
            break;
        }
    }
    return result;
}

std::string oeis_lookup(const OeisSnapshot &snapshot, const std::vector<BigInt> &computed)
{
    for (const auto &[id, seq] : snapshot.sequences()) {
        if (seq.first_index != 0 || seq.terms.size() < computed.size()) {
            continue;
        }
        if (oeis_check(snapshot, id, computed).match) {
            return id;
        }
    }
    return {};
}

std::string oeis_bfile_url(const std::string &id)
{
    return "https://oeis.org/" + id + "/b" + id.substr(1) + ".txt";
}

} // namespace parkfun
