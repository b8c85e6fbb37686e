#ifndef TVERBERG_CRITERION_HPP
#define TVERBERG_CRITERION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tverberg {

struct PrimePower
{
    std::int64_t prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial factorization; throws std::invalid_argument for r < 2.
std::optional<PrimePower> is_prime_power(std::int64_t r);
bool is_prime(std::int64_t n);

/// N = (r-1)(d+1).
std::int64_t tverberg_number(std::int64_t d, std::int64_t r);

/// Index of the sphere S(W_r^{(d+1)}), which is (r-1)(d+1).
std::int64_t sphere_index(std::int64_t d, std::int64_t r);

/// min{m, n, floor((m+n+1)/3)} - 2 for m, n >= 1.
std::int64_t chessboard_connectivity_formula(std::int64_t m, std::int64_t n);

/// Connectivity of one join factor Delta_{c,r}; an empty class gives -2.
std::int64_t factor_connectivity(std::int64_t cardinality, std::int64_t r);

/// Iterated join bound: sum of the values plus 2 per join. Throws on empty input.
std::int64_t join_connectivity_lower_bound(std::span<const std::int64_t> conn_values);

/// Statements a colored instance can be checked against.
enum class Theorem
{
    ZivaljevicVrecica,      // every class >= 2r-1
    GeneralizedZV,          // one class >= 2r-1, the rest >= 2r-4
    FlexibleCardinalities,  // class i >= 2r-1-3x_i, sum x_i <= d, 2x_i+1 <= r
    OptimalColored,         // r prime, classes <= r-1, at least N+1 points
    BaranyLarman,           // r+1 prime, d+1 classes of size >= r
};

std::string theorem_name(Theorem t);
/// Accepts the short CLI names: zv, thm42, thm51, optimal, bl.
std::optional<Theorem> parse_theorem(const std::string& name);

/// Report tag: the strongest statement whose hypotheses the cards satisfy,
/// "formula-only" when only the connectivity bound applies, else "none".
enum class CriterionTag { ZivaljevicVrecica, GeneralizedZV, FlexibleCardinalities, FormulaOnly, None };
std::string tag_name(CriterionTag t);

struct CriterionInput
{
    std::int64_t d = 1;
    std::int64_t r = 2;
    std::vector<std::int64_t> cards;

    /// Throws std::invalid_argument on d < 1, r < 2, no classes or a negative class.
    void validate() const;
};

struct CriterionReport
{
    bool applicable = false;
    std::optional<PrimePower> decomposition;
    std::vector<std::int64_t> conn_per_factor;
    std::int64_t join_conn_lower = 0;
    std::int64_t sphere_index = 0;
    /// join_conn_lower must reach this value, (d+1)(r-1)-1.
    std::int64_t required_conn = 0;
    bool guaranteed = false;
    CriterionTag tag = CriterionTag::None;
    /// Per-class x values certifying the flexible-cardinality hypotheses; 0
    /// for classes not among the d+1 selected ones.
    std::optional<std::vector<std::int64_t>> x_vector;
};

CriterionReport guarantee_criterion(const CriterionInput& input);

/**
 * True when `cards` meet the hypotheses of `t` for the given d and r. Only
 * d+1 classes are needed; when more are given the best d+1 are used, and
 * classes taking part must be nonempty. For the flexible statement the
 * lexicographically first admissible x-vector is written to `x_out`.
 */
bool hypotheses_hold(Theorem t, std::int64_t d, std::int64_t r, std::span<const std::int64_t> cards,
                     std::vector<std::int64_t>* x_out = nullptr);

}  // namespace tverberg

#endif
