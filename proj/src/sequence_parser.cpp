// Recursive-descent parser for the weight-sequence mini-language.
//
//   sequence := "explicit:" INT ("," INT)* [ "tail:" ["+"|"-"] INT ["/" INT] ]
//             | "ceil(" poly "/" INT ")"
//             | poly
//   poly     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := ["-"] primary ["^" INT]
//   primary  := INT | "m" | "(" poly ")"

#include <algorithm>
#include <cctype>

#include "parkfun/error.hpp"
#include "parkfun/weights.hpp"

namespace parkfun {

namespace {

using Poly = std::vector<BigInt>;

void trim(Poly &p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

Poly add(Poly a, const Poly &b, int sign)
{
    if (a.size() < b.size()) {
        a.resize(b.size());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += sign * b[i];
    }
    trim(a);
    return a;
}

Poly mul(const Poly &a, const Poly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    WeightSequence sequence()
    {
        skip_ws();
        if (consume_word("explicit:")) {
            return explicit_sequence();
        }
        if (consume_word("ceil(")) {
            Poly num = poly();
            expect('/');
            BigInt divisor = integer();
            expect(')');
            finish();
            if (divisor <= 0) {
                fail("ceil divisor must be positive");
            }
            return WeightSequence::ceil_quotient(std::move(num), std::move(divisor), canonical());
        }
        Poly p = poly();
        finish();
        return WeightSequence::polynomial(std::move(p), canonical());
    }

private:
    WeightSequence explicit_sequence()
    {
        std::vector<BigInt> values;
        values.push_back(signed_integer());
        while (peek() == ',') {
            ++pos_;
            values.push_back(signed_integer());
        }
        std::optional<TailRule> tail;
        if (consume_word("tail:")) {
            TailRule rule;
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
            }
            rule.step = sign * integer();
            if (peek() == '/') {
                ++pos_;
                const BigInt period = integer();
                if (period <= 0) {
                    fail("tail period must be positive");
                }
                rule.period = period.convert_to<std::size_t>();
            }
            tail = rule;
        }
        finish();
        return WeightSequence::explicit_values(std::move(values), std::move(tail), canonical());
    }

    Poly poly()
    {
        Poly acc = term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') {
                return acc;
            }
            ++pos_;
            acc = add(std::move(acc), term(), c == '+' ? 1 : -1);
        }
    }

    Poly term()
    {
        Poly acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc = mul(acc, factor());
        }
        return acc;
    }

    Poly factor()
    {
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        Poly base = primary();
        if (peek() == '^') {
            ++pos_;
            const BigInt e = integer();
            if (e > 64) {
                fail("exponent too large");
            }
            Poly r{1};
            for (int i = 0; i < e.convert_to<int>(); ++i) {
                r = mul(r, base);
            }
            base = std::move(r);
        }
        if (negate) {
            base = add({}, base, -1);
        }
        return base;
    }

    Poly primary()
    {
        const char c = peek();
        if (c == 'm') {
            ++pos_;
            return {0, 1};
        }
        if (c == '(') {
            ++pos_;
            Poly p = poly();
            expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Poly p{integer()};
            trim(p);
            return p;
        }
        fail(c == '\0' ? "unexpected end of expression" : std::string("unexpected '") + c + "'");
    }

    BigInt integer()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    BigInt signed_integer()
    {
        if (peek() == '-') {
            ++pos_;
            return -integer();
        }
        return integer();
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool consume_word(std::string_view word)
    {
        skip_ws();
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void finish()
    {
        if (peek() != '\0') {
            fail("trailing input");
        }
    }

    std::string canonical() const
    {
        std::string s(text_);
        const auto first = s.find_first_not_of(" \t\n");
        const auto last = s.find_last_not_of(" \t\n");
        return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    }

    [[noreturn]] void fail(const std::string &why) const
    {
        throw parse_error("bad sequence expression '" + std::string(text_) + "' at column "
                          + std::to_string(pos_ + 1) + ": " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

WeightSequence WeightSequence::parse(std::string_view expression)
{
    return Parser(expression).sequence();
}

} // namespace parkfun
