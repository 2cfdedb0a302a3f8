#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace parkfun::cli {

// Exit codes of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

// Entry point of the `parkfun` tool; args excludes the program name.
//
//   count  --seq EXPR --n N [--kind structures|types] [--method recursive|closed|brute]
//   char   --seq EXPR --n N --basis S|R|L [--format json|latex|text]
//   table  --which structures|types|characteristic --rows "EXPR;..." --n-max K
//          [--oeis PATH] [--format csv|latex]
//   verify --suite all|counts|bases|hecke|incexc|lift|lambda-combi|zero-sum|ky
//          --seqs "EXPR;..." --n-max K
//   oeis   --id AXXXXXX --seq EXPR --kind structures|types --bfile PATH
//          [--offset K] [--n-max K]
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// PARKFUN_BUDGET when set, the library default otherwise. Throws on a
// malformed value.
std::size_t budget_from_environment();

// Splits "a;b;c", trimming whitespace and dropping empty items.
std::vector<std::string> split_list(const std::string &text);

} // namespace parkfun::cli
