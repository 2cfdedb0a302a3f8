#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parkfun/bigint.hpp"

namespace parkfun {

struct OeisSequence {
    std::size_t first_index = 0;
    std::vector<BigInt> terms; // terms[i] is a(first_index + i)
};

// Offline OEIS data keyed by id ("A000272"). Loaded from b-file text: one
// "index value" pair per line, '#' comments and blank lines ignored,
// indices contiguous.
class OeisSnapshot {
public:
    void add(const std::string &id, OeisSequence seq);
    bool contains(const std::string &id) const { return sequences_.count(id) != 0; }
    // Throws unknown_id.
    const OeisSequence &at(const std::string &id) const;
    const std::map<std::string, OeisSequence> &sequences() const noexcept { return sequences_; }

    // Every A??????.txt or b??????.txt file in a directory, or a single file
    // (its id taken from the file name).
    static OeisSnapshot load(const std::filesystem::path &path);

private:
    std::map<std::string, OeisSequence> sequences_;
};

OeisSequence parse_bfile(const std::string &text);
OeisSequence read_bfile(const std::filesystem::path &path);

struct OeisCheck {
    bool match = false;
    std::size_t overlap = 0;
    std::optional<std::size_t> first_mismatch; // index n
    BigInt expected;
    BigInt computed;
};

// computed[n] is compared with a(n + offset) wherever both exist; the
// reported mismatch index is n. Throws unknown_id.
OeisCheck oeis_check(const OeisSnapshot &snapshot, const std::string &id, const std::vector<BigInt> &computed,
                     std::size_t offset = 0);

// First id (in id order) whose terms agree with every computed value over an
// overlap covering all computed indices; empty when none does.
std::string oeis_lookup(const OeisSnapshot &snapshot, const std::vector<BigInt> &computed);

// Canonical b-file location, e.g. https://oeis.org/A000272/b000272.txt
std::string oeis_bfile_url(const std::string &id);

} // namespace parkfun
