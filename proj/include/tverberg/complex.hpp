#ifndef TVERBERG_COMPLEX_HPP
#define TVERBERG_COMPLEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tverberg {

/// A vertex is identified by the join factor it came from and a label that
/// is unique inside that factor.
struct Vertex
{
    int tag = 0;
    std::int64_t label = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Strictly increasing sequence of vertices. The empty face is allowed and
/// stands for the (-1)-dimensional face.
using Face = std::vector<Vertex>;

/// Chessboard vertices encode the cell (row, col), both 1-based.
constexpr std::int64_t chess_label(int row, int col) { return (std::int64_t{row} << 20) | col; }
constexpr std::pair<int, int> chess_cell(std::int64_t label)
{
    return {static_cast<int>(label >> 20), static_cast<int>(label & ((1 << 20) - 1))};
}

class BudgetExceeded : public std::runtime_error
{
    public:
        explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultFaceBudget = 1'000'000;

/**
 * Finite abstract simplicial complex, stored as the full list of faces
 * grouped by dimension. Every list is sorted lexicographically on
 * (tag, label), so all iteration orders are deterministic.
 *
 * Instances are immutable once built. The complex with no vertices still
 * contains the empty face and has dimension -1.
 */
class SimplicialComplex
{
    public:
        /// The empty complex: no vertices, only the empty face.
        SimplicialComplex();

        /// Downward closure of the given faces. Duplicates and non-maximal
        /// faces are fine. Throws BudgetExceeded past `face_budget` faces.
        static SimplicialComplex from_faces(const std::vector<Face>& generators,
                                            std::size_t face_budget = kDefaultFaceBudget);

        int dim() const { return static_cast<int>(by_dim_.size()) - 2; }
        bool empty() const { return by_dim_.size() == 1; }

        /// Number of join factors this complex was assembled from; vertex
        /// tags lie in [0, factor_count()).
        int factor_count() const { return factors_; }

        /// k-faces in lexicographic order; empty span when k is out of range.
        std::span<const Face> faces_of_dim(int k) const;

        std::span<const Face> vertices_as_faces() const { return faces_of_dim(0); }
        std::vector<Vertex> vertices() const;

        bool contains(const Face& face) const;

        /// Position of `face` within faces_of_dim(face.size() - 1), or -1.
        std::ptrdiff_t index_of(const Face& face) const;

        /// Total number of faces, the empty face included.
        std::size_t face_count() const { return total_; }

    private:
        friend SimplicialComplex chessboard(int m, int n, std::size_t face_budget);
        friend SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y,
                                      std::size_t face_budget);

        // by_dim_[k + 1] holds the k-faces.
        std::vector<std::vector<Face>> by_dim_;
        std::size_t total_ = 1;
        int factors_ = 1;

        void add_sorted(std::vector<Face>&& faces_any_dim);
};

/// Chessboard complex on an m x n board: rook placements with no two
/// rooks sharing a row or a column.
SimplicialComplex chessboard(int m, int n, std::size_t face_budget = kDefaultFaceBudget);

/// Join on the tagged disjoint union. Tags of `y` are shifted past the
/// factors of `x`, so joins of joins keep one tag per original factor.
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y,
                       std::size_t face_budget = kDefaultFaceBudget);

/// (f_{-1}, f_0, ..., f_dim) with f_{-1} = 1.
std::vector<std::size_t> f_vector(const SimplicialComplex& complex);

std::span<const Face> faces_of_dim(const SimplicialComplex& complex, int k);

std::string to_string(const Vertex& v);
std::string to_string(const Face& face);

}  // namespace tverberg

#endif
