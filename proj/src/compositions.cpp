#include "parkfun/compositions.hpp"

#include <algorithm>
#include <numeric>

#include "parkfun/error.hpp"

namespace parkfun {

Composition::Composition(std::initializer_list<std::size_t> parts)
    : Composition(std::vector<std::size_t>(parts))
{
}

Composition::Composition(std::vector<std::size_t> parts) : parts_(std::move(parts))
{
    for (std::size_t p : parts_) {
        if (p == 0) {
            throw error("composition parts must be positive");
        }
        size_ += p;
    }
}

Composition Composition::from_descents(std::size_t n, std::vector<std::size_t> descents)
{
    std::sort(descents.begin(), descents.end());
    descents.erase(std::unique(descents.begin(), descents.end()), descents.end());
    if (n == 0) {
        if (!descents.empty()) {
            throw error("the empty composition has no descents");
        }
        return Composition();
    }
    std::vector<std::size_t> parts;
    std::size_t prev = 0;
    for (std::size_t d : descents) {
        if (d == 0 || d >= n) {
            throw error("descent " + std::to_string(d) + " outside [1, " + std::to_string(n - 1) + "]");
        }
        parts.push_back(d - prev);
        prev = d;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::size_t Composition::partial_sum(std::size_t i) const
{
    if (i > parts_.size()) {
        throw error("partial_sum index " + std::to_string(i) + " exceeds length "
                    + std::to_string(parts_.size()));
    }
    return std::accumulate(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(i), std::size_t{0});
}

std::vector<std::size_t> Composition::descents() const
{
    std::vector<std::size_t> out;
    std::size_t s = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        s += parts_[i];
        out.push_back(s);
    }
    return out;
}

Composition Composition::concat(const Composition &other) const
{
    std::vector<std::size_t> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(parts));
}

std::string Composition::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::strong_ordering operator<=>(const Composition &a, const Composition &b)
{
    if (auto c = a.size_ <=> b.size_; c != 0) {
        return c;
    }
    return a.parts_ <=> b.parts_;
}

namespace {

void compositions_rec(std::size_t remaining, std::vector<std::size_t> &prefix, std::vector<Composition> &out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (std::size_t first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        compositions_rec(remaining - first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions_of(std::size_t n)
{
    std::vector<Composition> out;
    out.reserve(n == 0 ? 1 : std::size_t{1} << (n - 1));
    std::vector<std::size_t> prefix;
    compositions_rec(n, prefix, out);
    return out;
}

std::vector<Composition> coarsenings(const Composition &pi)
{
    const auto desc = pi.descents();
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << desc.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << desc.size()); ++mask) {
        std::vector<std::size_t> kept;
        for (std::size_t j = 0; j < desc.size(); ++j) {
            if (mask >> j & 1U) {
                kept.push_back(desc[j]);
            }
        }
        out.push_back(Composition::from_descents(pi.size(), std::move(kept)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> refinements(const Composition &pi)
{
    std::vector<Composition> out{Composition()};
    for (std::size_t part : pi.parts()) {
        const auto pieces = compositions_of(part);
        std::vector<Composition> next;
        next.reserve(out.size() * pieces.size());
        for (const auto &head : out) {
            for (const auto &piece : pieces) {
                next.push_back(head.concat(piece));
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_coarsening(const Composition &coarse, const Composition &fine)
{
    if (coarse.size() != fine.size()) {
        return false;
    }
    const auto fd = fine.descents();
    for (std::size_t d : coarse.descents()) {
        if (!std::binary_search(fd.begin(), fd.end(), d)) {
            return false;
        }
    }
    return true;
}

Composition complement(const Composition &pi)
{
    const std::size_t n = pi.size();
    if (n == 0) {
        return pi;
    }
    const auto desc = pi.descents();
    std::vector<std::size_t> comp;
    for (std::size_t d = 1; d < n; ++d) {
        if (!std::binary_search(desc.begin(), desc.end(), d)) {
            comp.push_back(d);
        }
    }
    return Composition::from_descents(n, std::move(comp));
}

Composition conjugate(const Composition &pi)
{
    auto parts = complement(pi).parts();
    std::reverse(parts.begin(), parts.end());
    return Composition(std::move(parts));
}

} // namespace parkfun
