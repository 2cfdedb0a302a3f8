#include "parkfun/bigint.hpp"

#include "parkfun/error.hpp"

namespace parkfun {

BigInt binomial(const BigInt &top, std::int64_t k)
{
    if (k < 0 || top < 0 || top < k) {
        return 0;
    }
    BigInt result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= top - i;
        result /= i + 1;
    }
    return result;
}

BigInt multinomial(std::span<const std::size_t> parts)
{
    BigInt result = 1;
    std::size_t total = 0;
    for (std::size_t p : parts) {
        total += p;
        result *= binomial(BigInt(total), static_cast<std::int64_t>(p));
    }
    return result;
}

BigInt power(const BigInt &base, std::size_t exponent)
{
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

BigInt parse_bigint(const std::string &text)
{
    std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (i == text.size()) {
        throw parse_error("not an integer: '" + text + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw parse_error("not an integer: '" + text + "'");
        }
    }
    BigInt v(text.substr(i));
    return text[0] == '-' ? BigInt(-v) : v;
}

} // namespace parkfun
