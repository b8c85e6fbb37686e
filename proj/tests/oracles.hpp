// Test-only oracles. Each one recomputes a quantity by a different route from
// the library (brute-force enumeration, dense elimination, basis enumeration)
// so the unit and acceptance suites can compare against it.
#ifndef TVERBERG_TESTS_ORACLES_HPP
#define TVERBERG_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tverberg/complex.hpp"
#include "tverberg/geometry.hpp"
#include "tverberg/homology.hpp"
#include "tverberg/rational.hpp"
#include "tverberg/search.hpp"

namespace oracle {

using tverberg::Rational;

inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline std::int64_t factorial(std::int64_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

/// f_{k-1}(Delta_{m,n}) = C(m,k) C(n,k) k!.
inline std::int64_t chessboard_faces(std::int64_t m, std::int64_t n, std::int64_t k)
{
    return binomial(m, k) * binomial(n, k) * factorial(k);
}

/// Count faces of Delta_{m,n} by size over every subset of the m*n cells.
inline std::vector<std::int64_t> chessboard_counts_by_subsets(int m, int n)
{
    const int cells = m * n;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(std::min(m, n)) + 2, 0);
    for (std::uint32_t mask = 0; mask < (1u << cells); ++mask)
    {
        std::uint32_t rows = 0, cols = 0;
        bool ok = true;
        int size = 0;
        for (int c = 0; c < cells && ok; ++c)
            if (mask & (1u << c))
            {
                const int row = c / n, col = c % n;
                ok = !(rows & (1u << row)) && !(cols & (1u << col));
                rows |= 1u << row;
                cols |= 1u << col;
                ++size;
            }
        if (ok)
            ++counts[static_cast<std::size_t>(size)];
    }
    return counts;
}

/// Dense rank over Q by plain Gaussian elimination on rationals.
inline std::size_t dense_rank_q(std::vector<std::vector<Rational>> a)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c)
    {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != rank && a[i][c] != 0)
            {
                const Rational f = a[i][c] / a[rank][c];
                for (std::size_t j = c; j < cols; ++j)
                    a[i][j] -= f * a[rank][j];
            }
        ++rank;
    }
    return rank;
}

/// Dense rank over Z/p.
inline std::size_t dense_rank_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t p)
{
    auto inv = [p](std::int64_t x) {
        std::int64_t r = 1, b = ((x % p) + p) % p, e = p - 2;
        while (e)
        {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& v : row)
            v = ((v % p) + p) % p;
    for (std::size_t c = 0; c < cols && rank < rows; ++c)
    {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        const std::int64_t iv = inv(a[rank][c]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != rank && a[i][c] != 0)
            {
                const std::int64_t f = a[i][c] * iv % p;
                for (std::size_t j = c; j < cols; ++j)
                    a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
            }
        ++rank;
    }
    return rank;
}

/// Boundary matrix built independently: sign (-1)^i for dropping the i-th vertex.
inline std::vector<std::vector<std::int64_t>> dense_boundary(const tverberg::SimplicialComplex& k, int degree)
{
    const auto rows = k.faces_of_dim(degree - 1);
    const auto cols = k.faces_of_dim(degree);
    std::map<tverberg::Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_index[rows[i]] = i;
    std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < cols[c].size(); ++i)
        {
            tverberg::Face f = cols[c];
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            m[row_index.at(f)][c] = i % 2 == 0 ? 1 : -1;
        }
    return m;
}

/// Reduced Betti numbers from dense ranks; p == 0 means the rationals.
inline std::vector<std::size_t> dense_reduced_betti(const tverberg::SimplicialComplex& k, std::int64_t p)
{
    std::vector<std::size_t> rank(static_cast<std::size_t>(k.dim()) + 2, 0);
    for (int d = 0; d <= k.dim(); ++d)
    {
        auto m = dense_boundary(k, d);
        if (p == 0)
        {
            std::vector<std::vector<Rational>> q(m.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                for (auto v : m[i])
                    q[i].emplace_back(v);
            rank[static_cast<std::size_t>(d)] = dense_rank_q(std::move(q));
        }
        else
            rank[static_cast<std::size_t>(d)] = dense_rank_mod(std::move(m), p);
    }
    std::vector<std::size_t> betti;
    for (int d = 0; d <= k.dim(); ++d)
        betti.push_back(k.faces_of_dim(d).size() - rank[static_cast<std::size_t>(d)]
                        - rank[static_cast<std::size_t>(d) + 1]);
    return betti;
}

/// Feasibility of {x >= 0, Ax = b} by enumerating every column basis and
/// testing the basic solution it determines.
inline bool basis_enumeration_feasible(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b)
{
    const std::size_t m = a.size(), n = m ? a[0].size() : 0;
    if (std::all_of(b.begin(), b.end(), [](const Rational& v) { return v == 0; }))
        return true;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
    {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j))
                cols.push_back(j);
        if (cols.size() > m)
            continue;
        // Augmented system restricted to the chosen columns.
        std::vector<std::vector<Rational>> aug(m);
        for (std::size_t i = 0; i < m; ++i)
        {
            for (auto j : cols)
                aug[i].push_back(a[i][j]);
            aug[i].push_back(b[i]);
        }
        const std::size_t k = cols.size();
        std::size_t rank = 0;
        std::vector<std::size_t> pivot_col;
        for (std::size_t c = 0; c < k && rank < m; ++c)
        {
            std::size_t p = rank;
            while (p < m && aug[p][c] == 0)
                ++p;
            if (p == m)
                continue;
            std::swap(aug[p], aug[rank]);
            for (std::size_t i = 0; i < m; ++i)
                if (i != rank && aug[i][c] != 0)
                {
                    const Rational f = aug[i][c] / aug[rank][c];
                    for (std::size_t j = c; j <= k; ++j)
                        aug[i][j] -= f * aug[rank][j];
                }
            pivot_col.push_back(c);
            ++rank;
        }
        if (rank < k)
            continue;  // dependent columns: not a basis
        bool consistent = true;
        for (std::size_t i = rank; i < m; ++i)
            consistent = consistent && aug[i][k] == 0;
        if (!consistent)
            continue;
        bool nonnegative = true;
        for (std::size_t i = 0; i < rank; ++i)
            nonnegative = nonnegative && aug[i][k] / aug[i][pivot_col[i]] >= 0;
        if (nonnegative)
            return true;
    }
    return false;
}

/// Hull-intersection LP of the given faces, built directly.
inline bool faces_intersect_by_bases(const std::vector<tverberg::PointSet>& faces)
{
    const std::size_t d = faces[0][0].dim();
    std::size_t vars = 0;
    for (const auto& f : faces)
        vars += f.size();
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::size_t off = 0;
    std::vector<std::size_t> offsets;
    for (const auto& f : faces)
    {
        offsets.push_back(off);
        std::vector<Rational> row(vars);
        for (std::size_t v = 0; v < f.size(); ++v)
            row[off + v] = 1;
        a.push_back(row);
        b.emplace_back(1);
        off += f.size();
    }
    for (std::size_t j = 1; j < faces.size(); ++j)
        for (std::size_t c = 0; c < d; ++c)
        {
            std::vector<Rational> row(vars);
            for (std::size_t v = 0; v < faces[0].size(); ++v)
                row[v] += faces[0][v].coords[c];
            for (std::size_t v = 0; v < faces[j].size(); ++v)
                row[offsets[j] + v] -= faces[j][v].coords[c];
            a.push_back(row);
            b.emplace_back(0);
        }
    return basis_enumeration_feasible(a, b);
}

/// All admissible faces (as index lists) of a configuration by subset masks.
inline std::vector<std::vector<std::size_t>> subset_faces(const tverberg::ColoredConfiguration& config,
                                                          std::size_t max_size, bool rainbow)
{
    const auto color = config.color_of();
    const std::size_t n = config.points.size();
    std::vector<std::vector<std::size_t>> faces;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
    {
        std::vector<std::size_t> f;
        std::vector<std::size_t> colors;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1u << v))
            {
                f.push_back(v);
                colors.push_back(color[v]);
            }
        std::sort(colors.begin(), colors.end());
        if (f.size() > max_size)
            continue;
        if (rainbow && std::adjacent_find(colors.begin(), colors.end()) != colors.end())
            continue;
        faces.push_back(f);
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

struct NaiveResult
{
    std::vector<std::vector<std::size_t>> faces;
    tverberg::TverbergWitness witness;
};

/// Every r-tuple of disjoint admissible faces is listed, put in canonical
/// order (faces by smallest vertex, tuples lexicographically), sorted, and
/// tested one by one.
inline std::optional<NaiveResult> naive_tverberg(const tverberg::ColoredConfiguration& config, int r,
                                                 std::size_t max_size, bool rainbow = true)
{
    const auto faces = subset_faces(config, max_size, rainbow);
    std::vector<std::vector<std::vector<std::size_t>>> tuples;
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from, std::uint64_t used) -> void {
        if (pick.size() == static_cast<std::size_t>(r))
        {
            std::vector<std::vector<std::size_t>> t;
            for (auto i : pick)
                t.push_back(faces[i]);
            std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x[0] < y[0]; });
            tuples.push_back(std::move(t));
            return;
        }
        for (std::size_t i = from; i < faces.size(); ++i)
        {
            std::uint64_t m = 0;
            for (auto v : faces[i])
                m |= std::uint64_t{1} << v;
            if (m & used)
                continue;
            pick.push_back(i);
            self(self, i + 1, used | m);
            pick.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(tuples.begin(), tuples.end());
    for (const auto& t : tuples)
        if (auto w = tverberg::common_point_feasible(config.points, t))
            return NaiveResult{t, *w};
    return std::nullopt;
}

}  // namespace oracle

#endif
