#ifndef TVERBERG_SEARCH_HPP
#define TVERBERG_SEARCH_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tverberg/criterion.hpp"
#include "tverberg/geometry.hpp"

namespace tverberg {

/// At most one vertex per color class, at most d+1 vertices.
struct RainbowFace
{
    std::vector<std::size_t> vertices;  // sorted point indices
    std::vector<std::size_t> colors;    // sorted class indices

    friend bool operator==(const RainbowFace&, const RainbowFace&) = default;
};

/// r pairwise disjoint rainbow faces, ordered by smallest vertex index.
struct RainbowPartition
{
    std::vector<RainbowFace> faces;

    friend bool operator==(const RainbowPartition&, const RainbowPartition&) = default;
};

struct TverbergResult
{
    RainbowPartition partition;
    TverbergWitness witness;
};

enum class SearchStatus { Found, NotFound, Timeout };
std::string status_name(SearchStatus s);

struct SearchOptions
{
    /// Worker threads for the parallel search; 1 runs the serial reference.
    int workers = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SearchOutcome
{
    SearchStatus status = SearchStatus::NotFound;
    std::optional<TverbergResult> result;
    std::uint64_t lp_calls = 0;
};

/// All rainbow faces with 1..max_size vertices in lexicographic order of their
/// vertex lists. Throws std::invalid_argument unless 1 <= max_size <= d+1.
std::vector<RainbowFace> enumerate_rainbow_faces(const ColoredConfiguration& config, int max_size);

/**
 * Lexicographically first r-tuple of pairwise disjoint rainbow faces (faces of
 * at most d+1 vertices, tuple ordered by smallest vertex) whose convex hulls
 * share a point. Exhaustive: NotFound means no such tuple exists.
 *
 * Tuples are extended depth first; a partial tuple is dropped as soon as its
 * bounding boxes are disjoint or its hulls have no common point, which keeps
 * the lexicographic order of the answer.
 */
SearchOutcome find_colored_tverberg_serial(const ColoredConfiguration& config, int r,
                                           const SearchOptions& options = {});

/// OpenMP version over the first face; returns exactly the serial answer.
SearchOutcome find_colored_tverberg(const ColoredConfiguration& config, int r, const SearchOptions& options = {});

/// Every point is its own color class.
SearchOutcome find_uncolored_tverberg(const std::vector<RationalPoint>& points, int d, int r,
                                      const SearchOptions& options = {});

/// Exact check of disjointness, the rainbow property, face sizes and the witness.
bool verify_partition(const ColoredConfiguration& config, int r, const TverbergResult& result);

struct TrialFailure
{
    std::uint64_t seed = 0;
    std::string digest;
    SearchStatus status = SearchStatus::NotFound;
    ColoredConfiguration configuration;
};

struct VerificationReport
{
    std::string theorem_tag;
    std::int64_t d = 0;
    std::int64_t r = 0;
    std::vector<std::int64_t> cards;
    std::uint64_t seed_base = 0;
    std::size_t instances = 0;
    std::size_t found = 0;
    std::size_t timeouts = 0;
    /// Trials that did not find a partition, timeouts included, in seed order.
    std::vector<TrialFailure> failures;
    std::chrono::duration<double> elapsed{0};
};

struct CampaignOptions
{
    /// Trials run concurrently on this many threads.
    int workers = 1;
    std::chrono::duration<double> time_budget = std::chrono::seconds(60);
};

/// Runs `trials` seeded random configurations (seed seed_base + i). Throws
/// std::invalid_argument when the cards do not meet the theorem's hypotheses.
VerificationReport verify_theorem_instance(Theorem theorem, std::int64_t d, std::int64_t r,
                                           const std::vector<std::int64_t>& cards, std::size_t trials,
                                           std::uint64_t seed_base, const CampaignOptions& options = {});

/// Same campaign without any hypothesis check; misses are data, not errors.
VerificationReport hunt_counterexample(std::int64_t d, std::int64_t r, const std::vector<std::int64_t>& cards,
                                       std::size_t trials, std::uint64_t seed_base,
                                       const CampaignOptions& options = {});

/// FNV-1a over a canonical text rendering of the configuration.
std::string configuration_digest(const ColoredConfiguration& config);

}  // namespace tverberg

#endif
