#include "tverberg/simplex.hpp"

#include <stdexcept>

namespace tverberg::lp {

std::optional<std::vector<Rational>> find_feasible_point(const Matrix& a, const std::vector<Rational>& b)
{
    const std::size_t m = a.size();
    if (b.size() != m)
        throw std::invalid_argument("right-hand side length does not match the constraint count");
    const std::size_t n = m == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("ragged constraint matrix");

    // Columns: n structural, m artificial, then the right-hand side.
    const std::size_t width = n + m + 1;
    const std::size_t rhs = n + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        t[i][n + i] = 1;
        t[i][rhs] = flip ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
    }

    // Reduced costs of the phase-one objective (sum of artificials).
    std::vector<Rational> cost(width);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cost[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i)
        cost[rhs] -= t[i][rhs];

    for (;;)
    {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j)
            if (cost[j] < 0)
            {
                enter = j;
                break;
            }
        if (enter == width)
            break;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i)
        {
            if (t[i][enter] <= 0)
                continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave]))
            {
                leave = i;
                best_ratio = ratio;
            }
        }
        // Phase one is bounded below by zero, so an entering column always has a ratio.
        if (leave == m)
            throw std::logic_error("unbounded phase-one problem");

        const Rational pivot = t[leave][enter];
        for (auto& v : t[leave])
            v /= pivot;
        for (std::size_t i = 0; i < m; ++i)
        {
            if (i == leave || t[i][enter] == 0)
                continue;
            const Rational factor = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= factor * t[leave][j];
        }
        if (cost[enter] != 0)
        {
            const Rational factor = cost[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0)
                    cost[j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }

    if (cost[rhs] != 0)
        return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            x[basis[i]] = t[i][rhs];
    return x;
}

}  // namespace tverberg::lp
