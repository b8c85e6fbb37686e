#include "tverberg/geometry.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tverberg/simplex.hpp"

namespace tverberg {

RationalPoint make_point(std::initializer_list<std::int64_t> coords)
{
    RationalPoint p;
    for (auto c : coords)
        p.coords.emplace_back(c);
    return p;
}

void ColoredConfiguration::validate() const
{
    if (d < 1)
        throw std::invalid_argument("dimension must be >= 1");
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].dim() != static_cast<std::size_t>(d))
            throw std::invalid_argument("point " + std::to_string(i) + " has " + std::to_string(points[i].dim())
                                        + " coordinates, expected " + std::to_string(d));
    std::vector<int> seen(points.size(), 0);
    for (const auto& cls : color_classes)
        for (auto idx : cls)
        {
            if (idx >= points.size())
                throw std::invalid_argument("color class refers to missing point " + std::to_string(idx));
            if (seen[idx]++)
                throw std::invalid_argument("point " + std::to_string(idx) + " appears in more than one color class");
        }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw std::invalid_argument("point " + std::to_string(i) + " has no color");
}

std::vector<std::size_t> ColoredConfiguration::color_of() const
{
    std::vector<std::size_t> out(points.size(), 0);
    for (std::size_t c = 0; c < color_classes.size(); ++c)
        for (auto idx : color_classes[c])
            out[idx] = c;
    return out;
}

std::vector<std::int64_t> ColoredConfiguration::cardinalities() const
{
    std::vector<std::int64_t> out;
    for (const auto& cls : color_classes)
        out.push_back(static_cast<std::int64_t>(cls.size()));
    return out;
}

ColoredConfiguration uncolored_configuration(int d, std::vector<RationalPoint> points)
{
    ColoredConfiguration config;
    config.d = d;
    config.points = std::move(points);
    for (std::size_t i = 0; i < config.points.size(); ++i)
        config.color_classes.push_back({i});
    return config;
}

std::optional<TverbergWitness> common_point_feasible(const std::vector<RationalPoint>& points,
                                                     std::span<const std::vector<std::size_t>> faces)
{
    if (faces.empty())
        throw std::invalid_argument("at least one face is required");
    std::size_t dim = 0;
    bool have_dim = false;
    std::size_t vars = 0;
    for (const auto& face : faces)
    {
        if (face.empty())
            throw std::invalid_argument("faces must be nonempty");
        for (auto idx : face)
        {
            if (idx >= points.size())
                throw std::invalid_argument("face refers to missing point " + std::to_string(idx));
            if (!have_dim)
            {
                dim = points[idx].dim();
                have_dim = true;
            }
            else if (points[idx].dim() != dim)
                throw std::invalid_argument("points of differing dimension");
        }
        vars += face.size();
    }

    const std::size_t r = faces.size();
    lp::Matrix a;
    std::vector<Rational> b;
    std::vector<std::size_t> offset(r, 0);
    for (std::size_t j = 1; j < r; ++j)
        offset[j] = offset[j - 1] + faces[j - 1].size();

    for (std::size_t j = 0; j < r; ++j)
    {
        std::vector<Rational> row(vars);
        for (std::size_t v = 0; v < faces[j].size(); ++v)
            row[offset[j] + v] = 1;
        a.push_back(std::move(row));
        b.emplace_back(1);
    }
    for (std::size_t j = 1; j < r; ++j)
        for (std::size_t c = 0; c < dim; ++c)
        {
            std::vector<Rational> row(vars);
            for (std::size_t v = 0; v < faces[0].size(); ++v)
                row[v] = points[faces[0][v]].coords[c];
            for (std::size_t v = 0; v < faces[j].size(); ++v)
                row[offset[j] + v] = -points[faces[j][v]].coords[c];
            a.push_back(std::move(row));
            b.emplace_back(0);
        }

    auto x = lp::find_feasible_point(a, b);
    if (!x)
        return std::nullopt;

    TverbergWitness w;
    for (std::size_t j = 0; j < r; ++j)
        w.coefficients.emplace_back(x->begin() + static_cast<std::ptrdiff_t>(offset[j]),
                                    x->begin() + static_cast<std::ptrdiff_t>(offset[j] + faces[j].size()));
    w.common_point.coords.assign(dim, Rational(0));
    for (std::size_t v = 0; v < faces[0].size(); ++v)
        for (std::size_t c = 0; c < dim; ++c)
            w.common_point.coords[c] += w.coefficients[0][v] * points[faces[0][v]].coords[c];
    return w;
}

namespace {

// Flatten point sets into one list with index faces.
void flatten(std::span<const PointSet> faces, std::vector<RationalPoint>& points,
             std::vector<std::vector<std::size_t>>& index_faces)
{
    for (const auto& face : faces)
    {
        std::vector<std::size_t> idx;
        for (const auto& p : face)
        {
            idx.push_back(points.size());
            points.push_back(p);
        }
        index_faces.push_back(std::move(idx));
    }
}

}  // namespace

std::optional<TverbergWitness> common_point_feasible(std::span<const PointSet> faces)
{
    std::vector<RationalPoint> points;
    std::vector<std::vector<std::size_t>> index_faces;
    flatten(faces, points, index_faces);
    return common_point_feasible(points, index_faces);
}

bool verify_witness(const std::vector<RationalPoint>& points, std::span<const std::vector<std::size_t>> faces,
                    const TverbergWitness& witness)
{
    if (witness.coefficients.size() != faces.size())
        return false;
    const std::size_t dim = witness.common_point.dim();
    for (std::size_t j = 0; j < faces.size(); ++j)
    {
        const auto& lambda = witness.coefficients[j];
        if (lambda.size() != faces[j].size() || faces[j].empty())
            return false;
        Rational total = 0;
        std::vector<Rational> combo(dim);
        for (std::size_t v = 0; v < lambda.size(); ++v)
        {
            if (lambda[v] < 0 || faces[j][v] >= points.size())
                return false;
            const auto& p = points[faces[j][v]];
            if (p.dim() != dim)
                return false;
            total += lambda[v];
            for (std::size_t c = 0; c < dim; ++c)
                combo[c] += lambda[v] * p.coords[c];
        }
        if (total != 1 || combo != witness.common_point.coords)
            return false;
    }
    return true;
}

bool verify_witness(std::span<const PointSet> faces, const TverbergWitness& witness)
{
    std::vector<RationalPoint> points;
    std::vector<std::vector<std::size_t>> index_faces;
    flatten(faces, points, index_faces);
    return verify_witness(points, index_faces, witness);
}

Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col)
    {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col)
        {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row)
        {
            if (m[row][col] == 0)
                continue;
            const Rational f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k)
                m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

bool general_position_check(const std::vector<RationalPoint>& points, int d)
{
    const std::size_t k = static_cast<std::size_t>(d) + 1;
    if (points.size() < k)
        return true;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = i;
    for (;;)
    {
        std::vector<std::vector<Rational>> m;
        for (std::size_t i = 1; i < k; ++i)
        {
            std::vector<Rational> row;
            for (int c = 0; c < d; ++c)
                row.push_back(points[pick[i]].coords[static_cast<std::size_t>(c)]
                              - points[pick[0]].coords[static_cast<std::size_t>(c)]);
            m.push_back(std::move(row));
        }
        if (determinant(std::move(m)) == 0)
            return false;

        // Next k-subset in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == points.size() - k + i - 1)
            --i;
        if (i == 0)
            return true;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

bool general_position_check(const ColoredConfiguration& config) { return general_position_check(config.points, config.d); }

namespace {

// Uniform draw from [0, bound) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t draw_below(std::mt19937_64& engine, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;)
    {
        const std::uint64_t v = engine();
        if (v < limit)
            return v % bound;
    }
}

}  // namespace

ColoredConfiguration random_configuration(int d, std::span<const std::int64_t> cards, std::uint64_t seed)
{
    if (d < 1)
        throw std::invalid_argument("dimension must be >= 1");
    if (cards.empty())
        throw std::invalid_argument("at least one color class is required");
    std::size_t total = 0;
    for (auto c : cards)
    {
        if (c < 0)
            throw std::invalid_argument("color class cardinalities must be nonnegative");
        total += static_cast<std::size_t>(c);
    }

    ColoredConfiguration config;
    config.d = d;
    std::size_t next = 0;
    for (auto c : cards)
    {
        std::vector<std::size_t> cls;
        for (std::int64_t i = 0; i < c; ++i)
            cls.push_back(next++);
        config.color_classes.push_back(std::move(cls));
    }

    std::mt19937_64 engine(seed);
    do
    {
        config.points.assign(total, RationalPoint{});
        for (auto& p : config.points)
            for (int c = 0; c < d; ++c)
            {
                const std::uint64_t den = 1 + draw_below(engine, 1000);
                const std::uint64_t num = draw_below(engine, 1000 * den + 1);
                p.coords.emplace_back(Integer(num), Integer(den));
            }
    } while (!general_position_check(config));
    return config;
}

}  // namespace tverberg
