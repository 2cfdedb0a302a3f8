#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parkfun/bigint.hpp"
#include "parkfun/weights.hpp"

namespace parkfun {

using Letter = std::uint64_t;

// A word f = (f(1), ..., f(n)) of positive letters. A parking function is a
// word that satisfies is_parking for a given weight sequence.
using Word = std::vector<Letter>;

// Inversion pairs (i, j), 1-based, i < j, sorted lexicographically.
using InversionSet = std::vector<std::pair<std::size_t, std::size_t>>;

inline constexpr std::size_t default_budget = 100'000'000;

// x(m) as a letter; throws when the value does not fit in 64 bits.
Letter to_letter(const BigInt &v);

std::string word_to_string(const Word &w);

// Element of a free Z-module over Key, zero coefficients never stored.
template <class Key>
class FormalSum {
public:
    using Terms = std::map<Key, BigInt>;

    FormalSum() = default;
    explicit FormalSum(const Key &k, const BigInt &c = 1) { add(k, c); }

    void add(const Key &k, const BigInt &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    FormalSum &operator+=(const FormalSum &o)
    {
        for (const auto &[k, c] : o.terms_) {
            add(k, c);
        }
        return *this;
    }

    FormalSum operator-() const
    {
        FormalSum out;
        for (const auto &[k, c] : terms_) {
            out.terms_.emplace(k, -c);
        }
        return out;
    }

    BigInt coefficient(const Key &k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    friend bool operator==(const FormalSum &, const FormalSum &) = default;

private:
    Terms terms_;
};

using SignedFormalSum = FormalSum<Word>;

// A sequence of k disjoint, possibly empty blocks covering [n]. Blocks are
// kept sorted.
struct SetSequence {
    std::vector<std::vector<std::size_t>> blocks;

    std::size_t size() const;
    // Block index (1-based) containing j.
    std::size_t slot_of(std::size_t j) const;

    friend auto operator<=>(const SetSequence &, const SetSequence &) = default;
};

// Q_i = f^{-1}(i) for i = 1..k; requires every letter <= k.
SetSequence to_set_sequence(const Word &w, std::size_t k);
Word to_word(const SetSequence &q);

// A sequence of disjoint nonempty blocks covering [n].
struct OrderedSetPartition {
    std::vector<std::vector<std::size_t>> blocks;

    std::size_t size() const;

    friend auto operator<=>(const OrderedSetPartition &, const OrderedSetPartition &) = default;
};

std::vector<OrderedSetPartition> ordered_set_partitions(std::size_t n);

// |{i : f(i) <= x(k)}| >= k for every 1 <= k <= n.
bool is_parking(const Word &f, const WeightSequence &x);

// All parking functions of size n, lexicographic. Brute force over
// [x(n)]^n; throws budget_exceeded when x(n)^n > budget.
std::vector<Word> enumerate_structures(const WeightSequence &x, std::size_t n,
                                       std::size_t budget = default_budget);

// Nondecreasing parking functions of size n (isomorphism types), lexicographic.
// Throws budget_exceeded when binom(x(n)+n-1, n) > budget.
std::vector<Word> enumerate_types(const WeightSequence &x, std::size_t n, std::size_t budget = default_budget);

// Ranks the letters of w (ties broken left to right) and replaces rank r by x(r).
Word standardize(const Word &w, const WeightSequence &x);

// Elements of block j receive x(1 + |B_1| + ... + |B_{j-1}|).
Word from_ordered_set_partition(const OrderedSetPartition &p, const WeightSequence &x);

// The image of every ordered set partition of [n], sorted. Throws
// not_injective when two partitions map to the same word.
std::vector<Word> primitives(const WeightSequence &x, std::size_t n);

// The unchecked map, one entry per ordered set partition.
std::vector<std::pair<OrderedSetPartition, Word>> primitive_preimages(const WeightSequence &x, std::size_t n);

// Membership in the image of from_ordered_set_partition: the blocks of f
// ordered by value must map back onto f.
bool is_primitive(const Word &f, const WeightSequence &x);

InversionSet inversion_set(const Word &f);

// n - |image(f)|; throws not_primitive for non-primitive f.
std::size_t dimension(const Word &f, const WeightSequence &x);

// f(i) <= g(i) for every i; throws length_mismatch.
bool leq_pointwise(const Word &f, const Word &g);

// Q . T_i for the 0-Hecke generator T_i, 1 <= i <= n-1:
//   sigma_i(Q) if slot(i) < slot(i+1), 0 if equal, -Q otherwise.
FormalSum<SetSequence> hecke_action(const SetSequence &q, std::size_t i);
FormalSum<SetSequence> hecke_action(const FormalSum<SetSequence> &v, std::size_t i);

// Every element of E^k[n] (k^n set sequences).
std::vector<SetSequence> all_set_sequences(std::size_t n, std::size_t k);

struct HeckeCheck {
    bool ok = true;
    std::size_t basis_elements = 0;
    std::string failure;
};

// Verifies T_i^2 = -T_i, T_i T_j = T_j T_i (|i-j| >= 2) and
// T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1} on every basis element of E^k[n].
HeckeCheck check_hecke_relations(std::size_t n, std::size_t k);

} // namespace parkfun
