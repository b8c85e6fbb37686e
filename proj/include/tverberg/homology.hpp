#ifndef TVERBERG_HOMOLOGY_HPP
#define TVERBERG_HOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tverberg/complex.hpp"
#include "tverberg/rational.hpp"

namespace tverberg {

/// Coefficient system for homology: the rationals, Z/p for a prime p, or Z.
class Coefficients
{
    public:
        enum class Kind { Rationals, PrimeField, Integers };

        static Coefficients rationals() { return Coefficients(Kind::Rationals, 0); }
        static Coefficients integers() { return Coefficients(Kind::Integers, 0); }
        /// Throws std::invalid_argument unless p is prime.
        static Coefficients prime_field(std::int64_t p);

        /// Accepts "Q", "Z", "Zp" style names such as "Z2" or "Z7".
        static Coefficients parse(const std::string& name);

        Kind kind() const { return kind_; }
        std::int64_t prime() const { return prime_; }
        bool is_field() const { return kind_ != Kind::Integers; }
        std::string name() const;

        friend bool operator==(const Coefficients&, const Coefficients&) = default;

    private:
        Coefficients(Kind k, std::int64_t p) : kind_(k), prime_(p) {}
        Kind kind_;
        std::int64_t prime_;
};

/// Sparse boundary map C_k -> C_{k-1}, column-major. Rows are the (k-1)-faces
/// and columns the k-faces, both in lexicographic order. For k = 0 the single
/// row is the empty face (augmentation), which yields reduced homology.
struct ChainBoundary
{
    int degree = 0;
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;

    std::size_t cols() const { return columns.size(); }
};

ChainBoundary boundary_matrix(const SimplicialComplex& complex, int k);

/// Sparse product a * b, used to check that consecutive boundaries compose to zero.
std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> compose(const ChainBoundary& a,
                                                                         const ChainBoundary& b);

struct HomologyProfile
{
    Coefficients coefficients = Coefficients::rationals();
    /// Reduced Betti numbers (free rank over Z), degrees 0..dim.
    std::vector<std::size_t> reduced_betti;
    /// Invariant factors > 1 per degree; only filled for integer coefficients.
    std::vector<std::vector<Integer>> torsion;

    /// True when the reduced group in degree k is nonzero.
    bool nonzero(int k) const;
};

struct HomologyOptions
{
    /// Integer Smith normal form is refused for boundary matrices with more columns.
    std::size_t snf_column_budget = 20'000;
    /// Degrees are reduced concurrently when > 1.
    int workers = 1;
};

/// Rank and, over Z, the invariant factors > 1 of one boundary matrix.
struct RankResult
{
    std::size_t rank = 0;
    std::vector<Integer> torsion;
};

RankResult boundary_rank(const ChainBoundary& boundary, const Coefficients& coefficients);

/// Exact reduced homology. Throws std::invalid_argument for the empty complex and
/// BudgetExceeded for integer coefficients past the SNF budget.
HomologyProfile betti_numbers(const SimplicialComplex& complex, const Coefficients& coefficients,
                              const HomologyOptions& options = {});

struct ConnectivityEstimate
{
    /// Largest h with vanishing reduced homology in every degree <= h; empty
    /// when nothing is nonzero up to dim ("all-vanishing").
    std::optional<int> hconn;
    /// Smallest degree with a nonzero reduced group (-1 for the empty complex).
    std::optional<int> witness_degree;
    std::vector<Coefficients> coefficients_tried;
    std::vector<HomologyProfile> profiles;

    bool all_vanishing() const { return !hconn.has_value(); }
};

/// {Z} when every boundary matrix fits the SNF budget, else {Q, Z2, Z3}.
std::vector<Coefficients> default_coefficients(const SimplicialComplex& complex, const HomologyOptions& options = {});

ConnectivityEstimate homological_connectivity(const SimplicialComplex& complex,
                                              const std::vector<Coefficients>& coefficients,
                                              const HomologyOptions& options = {});
ConnectivityEstimate homological_connectivity(const SimplicialComplex& complex, const HomologyOptions& options = {});

/// Sum of (-1)^k f_k over k >= 0.
std::int64_t euler_characteristic(const SimplicialComplex& complex);

/// Smith normal form diagonal of a dense integer matrix (nonzero entries only,
/// each dividing the next).
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> matrix);

}  // namespace tverberg

#endif
