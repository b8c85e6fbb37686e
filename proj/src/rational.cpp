#include "tverberg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tverberg {

std::string to_string(const Rational& q)
{
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (num[0] == '+')
        num.remove_prefix(1);
    Integer p(std::string{num});
    Integer q(std::string{den});
    if (q == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
}

}  // namespace tverberg
