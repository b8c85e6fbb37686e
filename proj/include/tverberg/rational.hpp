#ifndef TVERBERG_RATIONAL_HPP
#define TVERBERG_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tverberg {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Render as "p/q"; integers keep the "/1" so every value round-trips exactly.
std::string to_string(const Rational& q);

/// Parse "p/q" or "p" (optional sign on p). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace tverberg

#endif
