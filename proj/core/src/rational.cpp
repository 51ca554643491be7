#include "chordcut/rational.hpp"

#include <stdexcept>

namespace chordcut {
namespace {

bool is_integer_literal(std::string_view text)
{
    if (text.empty()) return false;
    std::size_t pos = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (pos == text.size()) return false;
    for (; pos < text.size(); ++pos)
        if (text[pos] < '0' || text[pos] > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text))
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");

    Integer num(std::string(num_text.front() == '+' ? num_text.substr(1) : num_text), 10);
    Integer den(1);
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+')
            throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
        den = Integer(std::string(den_text), 10);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

std::string to_string(const Integer& value)
{
    return value.get_str();
}

Integer floor(const Rational& value)
{
    Integer result;
    mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return result;
}

Integer ceil_div(long long numerator, long long denominator)
{
    Integer result;
    mpz_cdiv_q(result.get_mpz_t(), Integer(std::to_string(numerator)).get_mpz_t(),
               Integer(std::to_string(denominator)).get_mpz_t());
    return result;
}

}  // namespace chordcut
