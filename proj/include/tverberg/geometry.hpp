#ifndef TVERBERG_GEOMETRY_HPP
#define TVERBERG_GEOMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tverberg/rational.hpp"

namespace tverberg {

struct RationalPoint
{
    std::vector<Rational> coords;

    std::size_t dim() const { return coords.size(); }
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

RationalPoint make_point(std::initializer_list<std::int64_t> coords);

/// Points in R^d together with a partition of their indices into color classes.
struct ColoredConfiguration
{
    int d = 1;
    std::vector<RationalPoint> points;
    std::vector<std::vector<std::size_t>> color_classes;

    /// Throws std::invalid_argument unless every point has dimension d and the
    /// classes are pairwise disjoint and cover every index.
    void validate() const;

    /// color_of()[i] is the class holding point i.
    std::vector<std::size_t> color_of() const;

    std::vector<std::int64_t> cardinalities() const;
};

/// Every point in a class of its own.
ColoredConfiguration uncolored_configuration(int d, std::vector<RationalPoint> points);

/// Convex coefficients per face plus the point they all produce.
struct TverbergWitness
{
    /// coefficients[j][v] multiplies the v-th point of face j.
    std::vector<std::vector<Rational>> coefficients;
    RationalPoint common_point;
};

using PointSet = std::vector<RationalPoint>;

/**
 * Decide whether the convex hulls of the faces share a point.
 *
 * Solves { lambda >= 0, sum_v lambda_{j,v} = 1 per face, sum_v lambda_{1,v} x_v
 * = sum_v lambda_{j,v} x_v for j >= 2 } exactly. The witness is the first
 * feasible basic solution under the deterministic pivot order.
 *
 * Any common point already lies in the hull of at most d+1 vertices of each
 * face (Caratheodory), so callers may cap face sizes at d+1 without changing
 * the answer.
 *
 * Throws std::invalid_argument on an empty face list, an empty face, or
 * points of differing dimension.
 */
std::optional<TverbergWitness> common_point_feasible(std::span<const PointSet> faces);

/// Same decision with faces given as indices into `points`.
std::optional<TverbergWitness> common_point_feasible(const std::vector<RationalPoint>& points,
                                                     std::span<const std::vector<std::size_t>> faces);

/// Independent exact check of every witness invariant. Never throws.
bool verify_witness(std::span<const PointSet> faces, const TverbergWitness& witness);
bool verify_witness(const std::vector<RationalPoint>& points, std::span<const std::vector<std::size_t>> faces,
                    const TverbergWitness& witness);

/// No d+1 of the points on a common affine hyperplane.
bool general_position_check(const ColoredConfiguration& config);
bool general_position_check(const std::vector<RationalPoint>& points, int d);

/**
 * Seeded points in [0,1000]^d with denominators in [1,1000], redrawn until they
 * are in general position. Class i holds the next cards[i] indices. The output
 * is a pure function of (d, cards, seed).
 */
ColoredConfiguration random_configuration(int d, std::span<const std::int64_t> cards, std::uint64_t seed);

/// Exact determinant by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace tverberg

#endif
