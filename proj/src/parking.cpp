#include "parkfun/parking.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "parkfun/error.hpp"

namespace parkfun {

Letter to_letter(const BigInt &v)
{
    if (v < 0 || v > std::numeric_limits<Letter>::max()) {
        throw error("value " + v.str() + " does not fit a word letter");
    }
    return v.convert_to<Letter>();
}

std::string word_to_string(const Word &w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

std::size_t SetSequence::size() const
{
    std::size_t n = 0;
    for (const auto &b : blocks) {
        n += b.size();
    }
    return n;
}

std::size_t SetSequence::slot_of(std::size_t j) const
{
    for (std::size_t s = 0; s < blocks.size(); ++s) {
        if (std::binary_search(blocks[s].begin(), blocks[s].end(), j)) {
            return s + 1;
        }
    }
    throw error("element " + std::to_string(j) + " not covered by the set sequence");
}

SetSequence to_set_sequence(const Word &w, std::size_t k)
{
    SetSequence q;
    q.blocks.resize(k);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0 || w[i] > k) {
            throw error("letter " + std::to_string(w[i]) + " outside [1, " + std::to_string(k) + "]");
        }
        q.blocks[w[i] - 1].push_back(i + 1);
    }
    return q;
}

Word to_word(const SetSequence &q)
{
    Word w(q.size(), 0);
    for (std::size_t s = 0; s < q.blocks.size(); ++s) {
        for (std::size_t j : q.blocks[s]) {
            if (j == 0 || j > w.size() || w[j - 1] != 0) {
                throw error("set sequence blocks are not a disjoint cover of [n]");
            }
            w[j - 1] = s + 1;
        }
    }
    return w;
}

std::size_t OrderedSetPartition::size() const
{
    std::size_t n = 0;
    for (const auto &b : blocks) {
        n += b.size();
    }
    return n;
}

std::vector<OrderedSetPartition> ordered_set_partitions(std::size_t n)
{
    // Assign every element a block label, then keep labelings whose labels
    // are exactly 1..b; each such labeling is one ordered set partition.
    std::vector<OrderedSetPartition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::size_t> label(n, 1);
    for (;;) {
        const std::size_t b = *std::max_element(label.begin(), label.end());
        std::vector<std::vector<std::size_t>> blocks(b);
        for (std::size_t i = 0; i < n; ++i) {
            blocks[label[i] - 1].push_back(i + 1);
        }
        if (std::none_of(blocks.begin(), blocks.end(), [](const auto &blk) { return blk.empty(); })) {
            out.push_back(OrderedSetPartition{std::move(blocks)});
        }
        std::size_t pos = n;
        while (pos > 0 && label[pos - 1] == n) {
            label[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++label[pos - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// thresholds[k-1] = min(x(k), max letter) for k = 1..n
std::vector<Letter> thresholds(const WeightSequence &x, std::size_t n)
{
    std::vector<Letter> t(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const BigInt v = x(k);
        t[k - 1] = v > std::numeric_limits<Letter>::max() ? std::numeric_limits<Letter>::max() : v.convert_to<Letter>();
    }
    return t;
}

bool parks(const Word &f, const std::vector<Letter> &thr)
{
    for (std::size_t k = 1; k <= f.size(); ++k) {
        const auto cnt = static_cast<std::size_t>(
            std::count_if(f.begin(), f.end(), [&](Letter v) { return v <= thr[k - 1]; }));
        if (cnt < k) {
            return false;
        }
    }
    return true;
}

// For a nondecreasing word the condition reduces to f(k) <= x(k).
bool parks_sorted(const Word &f, const std::vector<Letter> &thr)
{
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] > thr[k]) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_parking(const Word &f, const WeightSequence &x)
{
    if (std::find(f.begin(), f.end(), Letter{0}) != f.end()) {
        return false;
    }
    return parks(f, thresholds(x, f.size()));
}

std::vector<Word> enumerate_structures(const WeightSequence &x, std::size_t n, std::size_t budget)
{
    if (n == 0) {
        return {Word{}};
    }
    const BigInt top = x(n);
    const BigInt candidates = power(top, n);
    if (candidates > budget) {
        throw budget_exceeded("enumerate_structures(" + x.describe() + ", " + std::to_string(n) + ")",
                              candidates.str());
    }
    std::vector<Word> out;
    if (top == 0) {
        return out;
    }
    const Letter maxv = to_letter(top);
    const auto thr = thresholds(x, n);
    Word w(n, 1);
    for (;;) {
        if (parks(w, thr)) {
            out.push_back(w);
        }
        std::size_t pos = n;
        while (pos > 0 && w[pos - 1] == maxv) {
            w[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++w[pos - 1];
    }
    return out;
}

std::vector<Word> enumerate_types(const WeightSequence &x, std::size_t n, std::size_t budget)
{
    if (n == 0) {
        return {Word{}};
    }
    const BigInt top = x(n);
    const BigInt candidates = binomial(top + n - 1, static_cast<std::int64_t>(n));
    if (candidates > budget) {
        throw budget_exceeded("enumerate_types(" + x.describe() + ", " + std::to_string(n) + ")", candidates.str());
    }
    std::vector<Word> out;
    if (top == 0) {
        return out;
    }
    const Letter maxv = to_letter(top);
    const auto thr = thresholds(x, n);
    Word w(n, 1);
    for (;;) {
        if (parks_sorted(w, thr)) {
            out.push_back(w);
        }
        // next nondecreasing word in lexicographic order
        std::size_t pos = n;
        while (pos > 0 && w[pos - 1] == maxv) {
            --pos;
        }
        if (pos == 0) {
            break;
        }
        const Letter v = w[pos - 1] + 1;
        std::fill(w.begin() + static_cast<std::ptrdiff_t>(pos - 1), w.end(), v);
    }
    return out;
}

Word standardize(const Word &w, const WeightSequence &x)
{
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    Word out(w.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        out[order[r]] = to_letter(x(r + 1));
    }
    return out;
}

Word from_ordered_set_partition(const OrderedSetPartition &p, const WeightSequence &x)
{
    Word out(p.size(), 0);
    std::size_t filled = 0;
    for (const auto &block : p.blocks) {
        if (block.empty()) {
            throw error("ordered set partition has an empty block");
        }
        const Letter v = to_letter(x(1 + filled));
        for (std::size_t j : block) {
            if (j == 0 || j > out.size() || out[j - 1] != 0) {
                throw error("ordered set partition blocks are not a disjoint cover of [n]");
            }
            out[j - 1] = v;
        }
        filled += block.size();
    }
    return out;
}

std::vector<std::pair<OrderedSetPartition, Word>> primitive_preimages(const WeightSequence &x, std::size_t n)
{
    std::vector<std::pair<OrderedSetPartition, Word>> out;
    for (auto &p : ordered_set_partitions(n)) {
        Word w = from_ordered_set_partition(p, x);
        out.emplace_back(std::move(p), std::move(w));
    }
    return out;
}

std::vector<Word> primitives(const WeightSequence &x, std::size_t n)
{
    std::map<Word, const OrderedSetPartition *> seen;
    const auto pre = primitive_preimages(x, n);
    for (const auto &[p, w] : pre) {
        auto [it, inserted] = seen.emplace(w, &p);
        if (!inserted) {
            throw not_injective("ordered set partitions map to the same word " + word_to_string(w) + " for x = "
                                + x.describe() + "; x is not strictly increasing on [" + std::to_string(n) + "]");
        }
    }
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const auto &[w, p] : seen) {
        out.push_back(w);
    }
    return out;
}

bool is_primitive(const Word &f, const WeightSequence &x)
{
    std::set<Letter> values(f.begin(), f.end());
    OrderedSetPartition p;
    for (Letter v : values) {
        std::vector<std::size_t> block;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == v) {
                block.push_back(i + 1);
            }
        }
        p.blocks.push_back(std::move(block));
    }
    return from_ordered_set_partition(p, x) == f;
}

InversionSet inversion_set(const Word &f)
{
    InversionSet out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (f[i] >= f[j]) {
                out.emplace_back(i + 1, j + 1);
            }
        }
    }
    return out;
}

std::size_t dimension(const Word &f, const WeightSequence &x)
{
    if (!is_primitive(f, x)) {
        throw not_primitive(word_to_string(f) + " is not primitive for x = " + x.describe());
    }
    return f.size() - std::set<Letter>(f.begin(), f.end()).size();
}

bool leq_pointwise(const Word &f, const Word &g)
{
    if (f.size() != g.size()) {
        throw length_mismatch("cannot compare words of lengths " + std::to_string(f.size()) + " and "
                              + std::to_string(g.size()));
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] > g[i]) {
            return false;
        }
    }
    return true;
}

FormalSum<SetSequence> hecke_action(const SetSequence &q, std::size_t i)
{
    const std::size_t n = q.size();
    if (i == 0 || i >= n) {
        throw error("T_" + std::to_string(i) + " undefined for n = " + std::to_string(n));
    }
    const std::size_t a = q.slot_of(i);
    const std::size_t b = q.slot_of(i + 1);
    if (a == b) {
        return {};
    }
    if (a > b) {
        return FormalSum<SetSequence>(q, -1);
    }
    SetSequence swapped = q;
    for (auto &block : swapped.blocks) {
        for (auto &j : block) {
            if (j == i) {
                j = i + 1;
            } else if (j == i + 1) {
                j = i;
            }
        }
        std::sort(block.begin(), block.end());
    }
    return FormalSum<SetSequence>(swapped);
}

FormalSum<SetSequence> hecke_action(const FormalSum<SetSequence> &v, std::size_t i)
{
    FormalSum<SetSequence> out;
    for (const auto &[q, c] : v.terms()) {
        const auto image = hecke_action(q, i);
        for (const auto &[r, d] : image.terms()) {
            out.add(r, c * d);
        }
    }
    return out;
}

std::vector<SetSequence> all_set_sequences(std::size_t n, std::size_t k)
{
    std::vector<SetSequence> out;
    if (n == 0) {
        out.push_back(SetSequence{std::vector<std::vector<std::size_t>>(k)});
        return out;
    }
    if (k == 0) {
        return out;
    }
    Word w(n, 1);
    for (;;) {
        out.push_back(to_set_sequence(w, k));
        std::size_t pos = n;
        while (pos > 0 && w[pos - 1] == k) {
            w[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++w[pos - 1];
    }
    return out;
}

HeckeCheck check_hecke_relations(std::size_t n, std::size_t k)
{
    HeckeCheck result;
    using V = FormalSum<SetSequence>;
    auto apply = [](V v, std::initializer_list<std::size_t> gens) {
        for (std::size_t g : gens) {
            v = hecke_action(v, g);
        }
        return v;
    };
    auto fail = [&](const SetSequence &q, const std::string &what) {
        if (result.ok) {
            result.ok = false;
            result.failure = what + " fails on " + word_to_string(to_word(q));
        }
    };
    for (const auto &q : all_set_sequences(n, k)) {
        ++result.basis_elements;
        const V v(q);
        for (std::size_t i = 1; i < n; ++i) {
            if (apply(v, {i, i}) != -apply(v, {i})) {
                fail(q, "T" + std::to_string(i) + "^2 = -T" + std::to_string(i));
            }
            for (std::size_t j = i + 2; j < n; ++j) {
                if (apply(v, {i, j}) != apply(v, {j, i})) {
                    fail(q, "T" + std::to_string(i) + "T" + std::to_string(j) + " commutation");
                }
            }
            if (i + 1 < n && apply(v, {i, i + 1, i}) != apply(v, {i + 1, i, i + 1})) {
                fail(q, "braid relation at " + std::to_string(i));
            }
        }
    }
    return result;
}

} // namespace parkfun
