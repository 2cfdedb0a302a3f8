#include "parkfun/weights.hpp"

#include <mutex>

#include "parkfun/error.hpp"

namespace parkfun {

namespace detail {

class SequenceSource {
public:
    explicit SequenceSource(std::string description) : description_(std::move(description)) {}
    virtual ~SequenceSource() = default;

    SequenceSource(const SequenceSource &) = delete;
    SequenceSource &operator=(const SequenceSource &) = delete;

    BigInt value(std::size_t m) const
    {
        if (m == 0) {
            throw error("weight sequences are indexed from 1");
        }
        std::lock_guard lock(mutex_);
        while (cache_.size() < m) {
            const std::size_t idx = cache_.size() + 1;
            BigInt v = compute(idx);
            if (v < 0) {
                throw monotonicity_violation("sequence " + description_ + " is negative at m = "
                                             + std::to_string(idx) + " (value " + v.str() + ")");
            }
            if (!cache_.empty() && v < cache_.back()) {
                throw monotonicity_violation("sequence " + description_ + " decreases at m = "
                                             + std::to_string(idx) + " (" + cache_.back().str() + " -> "
                                             + v.str() + ")");
            }
            cache_.push_back(std::move(v));
        }
        return cache_[m - 1];
    }

    const std::string &description() const noexcept { return description_; }

protected:
    virtual BigInt compute(std::size_t m) const = 0;

private:
    std::string description_;
    mutable std::mutex mutex_;
    mutable std::vector<BigInt> cache_;
};

namespace {

BigInt horner(const std::vector<BigInt> &coeffs, std::size_t m)
{
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * m + *it;
    }
    return acc;
}

class PolynomialSource final : public SequenceSource {
public:
    PolynomialSource(std::vector<BigInt> coeffs, std::string description)
        : SequenceSource(std::move(description)), coeffs_(std::move(coeffs))
    {
    }

protected:
    BigInt compute(std::size_t m) const override { return horner(coeffs_, m); }

private:
    std::vector<BigInt> coeffs_;
};

class CeilQuotientSource final : public SequenceSource {
public:
    CeilQuotientSource(std::vector<BigInt> numerator, BigInt divisor, std::string description)
        : SequenceSource(std::move(description)), numerator_(std::move(numerator)), divisor_(std::move(divisor))
    {
        if (divisor_ <= 0) {
            throw error("ceil divisor must be positive");
        }
    }

protected:
    BigInt compute(std::size_t m) const override
    {
        const BigInt a = horner(numerator_, m);
        BigInt q = a / divisor_;
        if (a > 0 && a % divisor_ != 0) {
            ++q;
        }
        return q;
    }

private:
    std::vector<BigInt> numerator_;
    BigInt divisor_;
};

class ExplicitSource final : public SequenceSource {
public:
    ExplicitSource(std::vector<BigInt> values, std::optional<TailRule> tail, std::string description)
        : SequenceSource(std::move(description)), values_(std::move(values)), tail_(std::move(tail))
    {
        if (values_.empty()) {
            throw error("explicit sequence needs at least one value");
        }
        if (tail_ && tail_->period == 0) {
            throw error("tail period must be positive");
        }
    }

protected:
    BigInt compute(std::size_t m) const override
    {
        if (m <= values_.size()) {
            return values_[m - 1];
        }
        if (!tail_) {
            throw sequence_exhausted("explicit sequence " + this->description() + " has only "
                                     + std::to_string(values_.size()) + " values; x("
                                     + std::to_string(m) + ") requested");
        }
        const std::size_t j = m - values_.size();
        return values_.back() + tail_->step * static_cast<unsigned long long>(j / tail_->period);
    }

private:
    std::vector<BigInt> values_;
    std::optional<TailRule> tail_;
};

std::string polynomial_text(const std::vector<BigInt> &coeffs)
{
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const BigInt &c = coeffs[k];
        if (c == 0) {
            continue;
        }
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (!out.empty()) {
            out += c < 0 ? "-" : "+";
        } else if (c < 0) {
            out += "-";
        }
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1) {
            out += mag.str() + "*";
        }
        out += "m";
        if (k > 1) {
            out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace
} // namespace detail

WeightSequence::WeightSequence(std::shared_ptr<const detail::SequenceSource> root, ShiftState state, BigInt scale)
    : root_(std::move(root)), state_(state), scale_(std::move(scale))
{
}

WeightSequence WeightSequence::polynomial(std::vector<BigInt> coeffs, std::string description)
{
    if (description.empty()) {
        description = detail::polynomial_text(coeffs);
    }
    return WeightSequence(std::make_shared<detail::PolynomialSource>(std::move(coeffs), std::move(description)),
                          {}, 1);
}

WeightSequence WeightSequence::ceil_quotient(std::vector<BigInt> numerator, BigInt divisor, std::string description)
{
    if (description.empty()) {
        description = "ceil((" + detail::polynomial_text(numerator) + ")/" + divisor.str() + ")";
    }
    return WeightSequence(std::make_shared<detail::CeilQuotientSource>(std::move(numerator), std::move(divisor),
                                                                       std::move(description)),
                          {}, 1);
}

WeightSequence WeightSequence::explicit_values(std::vector<BigInt> values, std::optional<TailRule> tail,
                                               std::string description)
{
    if (description.empty()) {
        description = "explicit:";
        for (std::size_t i = 0; i < values.size(); ++i) {
            description += (i ? "," : "") + values[i].str();
        }
        if (tail) {
            description += " tail:" + std::string(tail->step < 0 ? "" : "+") + tail->step.str();
            if (tail->period != 1) {
                description += "/" + std::to_string(tail->period);
            }
        }
    }
    return WeightSequence(
        std::make_shared<detail::ExplicitSource>(std::move(values), std::move(tail), std::move(description)), {}, 1);
}

WeightSequence WeightSequence::identity()
{
    return polynomial({0, 1}, "m");
}

BigInt WeightSequence::eval(std::size_t m) const
{
    if (m == 0) {
        throw error("weight sequences are indexed from 1");
    }
    BigInt v = root_->value(m + state_.offset);
    if (state_.anchor != 0) {
        v -= root_->value(state_.anchor);
    }
    if (scale_ != 1) {
        v *= scale_;
    }
    return v;
}

WeightSequence WeightSequence::shifted(std::size_t s) const
{
    if (s == 0) {
        throw error("shift amount must be positive");
    }
    // x(s+m) - x(1) = root(m + O + s) - root(1 + O) with the scale unchanged.
    return WeightSequence(root_, ShiftState{state_.offset + s, state_.offset + 1}, scale_);
}

WeightSequence WeightSequence::scaled(const BigInt &k) const
{
    if (k < 0) {
        throw error("scale factor must be nonnegative");
    }
    return WeightSequence(root_, state_, scale_ * k);
}

bool WeightSequence::strictly_increasing_on(std::size_t n) const
{
    for (std::size_t m = 1; m < n; ++m) {
        if (eval(m) >= eval(m + 1)) {
            return false;
        }
    }
    return true;
}

std::string WeightSequence::describe() const
{
    std::string out = root_->description();
    if (state_.offset != 0 || state_.anchor != 0) {
        out = "shift(" + out + ", offset=" + std::to_string(state_.offset)
              + ", anchor=" + std::to_string(state_.anchor) + ")";
    }
    if (scale_ != 1) {
        out = scale_.str() + "*(" + out + ")";
    }
    return out;
}

BigInt upsilon(const WeightSequence &x, const Composition &pi, std::size_t i)
{
    if (i == 0 || i > pi.length()) {
        throw error("upsilon index " + std::to_string(i) + " outside [1, " + std::to_string(pi.length()) + "]");
    }
    if (i == 1) {
        return x(1);
    }
    return x(1 + pi.partial_sum(i - 1)) - x(1 + pi.partial_sum(i - 2));
}

BigInt psi(const WeightSequence &x, const Composition &pi, const Composition &tau, std::size_t i)
{
    if (tau.size() != pi.length()) {
        throw error("psi: tau must be a composition of length(pi)");
    }
    if (i == 0 || i > tau.length()) {
        throw error("psi index " + std::to_string(i) + " outside [1, " + std::to_string(tau.length()) + "]");
    }
    if (i == 1) {
        return x(1);
    }
    return x(1 + pi.partial_sum(tau.partial_sum(i - 1))) - x(1 + pi.partial_sum(tau.partial_sum(i - 2)));
}

} // namespace parkfun
