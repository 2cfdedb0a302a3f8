#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace parkfun {

// An ordered list of positive parts. The empty composition is the unique
// composition of 0.
//
// Ordering is by size first, then lexicographic on the parts, so that within
// one degree terms appear as (1,1,1) < (1,2) < (2,1) < (3).
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<std::size_t> parts);
    explicit Composition(std::vector<std::size_t> parts);

    // Composition of n whose descent set (set of proper partial sums) is
    // `descents`. Entries must lie in [1, n-1]; order and duplicates are
    // ignored.
    static Composition from_descents(std::size_t n, std::vector<std::size_t> descents);

    const std::vector<std::size_t> &parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    // Zero-based part access.
    std::size_t operator[](std::size_t i) const { return parts_[i]; }

    // pi(i) = parts[0] + ... + parts[i-1]; pi(0) = 0 and pi(length) = size.
    std::size_t partial_sum(std::size_t i) const;

    // {pi(1), ..., pi(length-1)}, increasing.
    std::vector<std::size_t> descents() const;

    Composition concat(const Composition &other) const;

    // "[2,1,2]"
    std::string to_string() const;

    friend bool operator==(const Composition &, const Composition &) = default;
    friend std::strong_ordering operator<=>(const Composition &a, const Composition &b);

private:
    std::vector<std::size_t> parts_;
    std::size_t size_ = 0;
};

// All compositions of n, lexicographic by parts. 2^(n-1) items for n >= 1.
std::vector<Composition> compositions_of(std::size_t n);

// Every tau obtained by summing adjacent blocks of parts of pi, pi included.
// In the reverse refinement order these are exactly the tau with tau <= pi.
std::vector<Composition> coarsenings(const Composition &pi);

// Every tau of which pi is a coarsening.
std::vector<Composition> refinements(const Composition &pi);

// True when coarse is obtained from fine by merging adjacent parts.
bool is_coarsening(const Composition &coarse, const Composition &fine);

// Composition with descent set [n-1] minus descents(pi).
Composition complement(const Composition &pi);

// Reverse of the complement.
Composition conjugate(const Composition &pi);

} // namespace parkfun
