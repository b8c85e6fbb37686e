#ifndef TVERBERG_SIMPLEX_HPP
#define TVERBERG_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "tverberg/rational.hpp"

namespace tverberg::lp {

using Matrix = std::vector<std::vector<Rational>>;

/**
 * Exact phase-one simplex for { x >= 0 : A x = b }.
 *
 * Rows with a negative right-hand side are negated, one artificial variable
 * per row forms the starting basis, and the sum of artificials is driven to
 * zero with Bland's rule (lowest-index entering column, lowest-index basic
 * variable on ratio ties). Returns the first feasible basic solution reached,
 * or nothing when the minimum of the artificial sum is positive.
 */
std::optional<std::vector<Rational>> find_feasible_point(const Matrix& a, const std::vector<Rational>& b);

}  // namespace tverberg::lp

#endif
