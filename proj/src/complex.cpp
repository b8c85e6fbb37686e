#include "tverberg/complex.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace tverberg {

namespace {

std::size_t saturating_add(std::size_t a, std::size_t b)
{
    return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

std::size_t saturating_mul(std::size_t a, std::size_t b)
{
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
        return std::numeric_limits<std::size_t>::max();
    return a * b;
}

void check_budget(std::size_t count, std::size_t budget, const char* what)
{
    if (count > budget)
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(count) + " faces exceeds the budget of "
                             + std::to_string(budget));
}

}  // namespace

SimplicialComplex::SimplicialComplex() : by_dim_(1, std::vector<Face>{Face{}}) {}

void SimplicialComplex::add_sorted(std::vector<Face>&& faces_any_dim)
{
    std::size_t top = 0;
    for (const auto& f : faces_any_dim)
        top = std::max(top, f.size());
    by_dim_.assign(top + 1, {});
    for (auto& f : faces_any_dim)
        by_dim_[f.size()].push_back(std::move(f));
    total_ = 0;
    for (auto& bucket : by_dim_)
    {
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
        total_ += bucket.size();
    }
    if (by_dim_[0].empty())
        by_dim_[0].push_back(Face{});
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<Face>& generators, std::size_t face_budget)
{
    std::set<Face> all{Face{}};
    for (const auto& g : generators)
    {
        Face sorted = g;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("face contains a repeated vertex");
        if (sorted.size() >= 63 || (std::size_t{1} << sorted.size()) > face_budget)
            throw BudgetExceeded("downward closure of a " + std::to_string(sorted.size())
                                 + "-vertex face exceeds the face budget");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << sorted.size()); ++mask)
        {
            Face sub;
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if (mask & (std::uint64_t{1} << i))
                    sub.push_back(sorted[i]);
            all.insert(std::move(sub));
        }
        check_budget(all.size(), face_budget, "downward closure");
    }
    SimplicialComplex k;
    k.add_sorted(std::vector<Face>(all.begin(), all.end()));
    int max_tag = -1;
    for (const auto& v : k.faces_of_dim(0))
        max_tag = std::max(max_tag, v.front().tag);
    k.factors_ = std::max(1, max_tag + 1);
    return k;
}

std::span<const Face> SimplicialComplex::faces_of_dim(int k) const
{
    if (k < -1 || k > dim())
        return {};
    return by_dim_[static_cast<std::size_t>(k + 1)];
}

std::vector<Vertex> SimplicialComplex::vertices() const
{
    std::vector<Vertex> out;
    for (const auto& f : faces_of_dim(0))
        out.push_back(f.front());
    return out;
}

std::ptrdiff_t SimplicialComplex::index_of(const Face& face) const
{
    const auto bucket = faces_of_dim(static_cast<int>(face.size()) - 1);
    auto it = std::lower_bound(bucket.begin(), bucket.end(), face);
    if (it == bucket.end() || *it != face)
        return -1;
    return it - bucket.begin();
}

bool SimplicialComplex::contains(const Face& face) const { return index_of(face) >= 0; }

SimplicialComplex chessboard(int m, int n, std::size_t face_budget)
{
    if (m <= 0 || n <= 0)
        throw std::invalid_argument("chessboard dimensions must be positive, got " + std::to_string(m) + "x"
                                    + std::to_string(n));

    // f_{k-1} = C(m,k) C(n,k) k!, summed without overflow.
    std::size_t total = 1;
    std::size_t term = 1;
    for (int k = 1; k <= std::min(m, n); ++k)
    {
        term = saturating_mul(term, static_cast<std::size_t>(m - k + 1) * static_cast<std::size_t>(n - k + 1));
        term = term == std::numeric_limits<std::size_t>::max() ? term : term / static_cast<std::size_t>(k);
        total = saturating_add(total, term);
    }
    check_budget(total, face_budget, "chessboard");

    std::vector<Face> all;
    all.reserve(total);
    Face current;
    std::vector<bool> used_col(static_cast<std::size_t>(n) + 1, false);

    // Rows are visited in increasing order so `current` stays sorted.
    auto extend = [&](auto&& self, int next_row) -> void {
        all.push_back(current);
        for (int row = next_row; row <= m; ++row)
            for (int col = 1; col <= n; ++col)
            {
                if (used_col[static_cast<std::size_t>(col)])
                    continue;
                used_col[static_cast<std::size_t>(col)] = true;
                current.push_back(Vertex{0, chess_label(row, col)});
                self(self, row + 1);
                current.pop_back();
                used_col[static_cast<std::size_t>(col)] = false;
            }
    };
    extend(extend, 1);

    SimplicialComplex k;
    k.add_sorted(std::move(all));
    return k;
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y, std::size_t face_budget)
{
    check_budget(saturating_mul(x.face_count(), y.face_count()), face_budget, "join");

    const int shift = x.factor_count();
    std::vector<Face> all;
    all.reserve(x.face_count() * y.face_count());
    for (int i = -1; i <= x.dim(); ++i)
        for (const auto& sigma : x.faces_of_dim(i))
            for (int j = -1; j <= y.dim(); ++j)
                for (const auto& tau : y.faces_of_dim(j))
                {
                    Face f = sigma;
                    for (const auto& v : tau)
                        f.push_back(Vertex{v.tag + shift, v.label});
                    all.push_back(std::move(f));
                }

    SimplicialComplex k;
    k.add_sorted(std::move(all));
    k.factors_ = x.factor_count() + y.factor_count();
    return k;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& complex)
{
    std::vector<std::size_t> f;
    for (int k = -1; k <= complex.dim(); ++k)
        f.push_back(complex.faces_of_dim(k).size());
    return f;
}

std::span<const Face> faces_of_dim(const SimplicialComplex& complex, int k) { return complex.faces_of_dim(k); }

std::string to_string(const Vertex& v)
{
    auto [row, col] = chess_cell(v.label);
    std::ostringstream os;
    if (v.tag != 0)
        os << v.tag << ':';
    if (row > 0 && col > 0)
        os << '(' << row << ',' << col << ')';
    else
        os << v.label;
    return os.str();
}

std::string to_string(const Face& face)
{
    std::string out = "{";
    for (std::size_t i = 0; i < face.size(); ++i)
    {
        if (i)
            out += ",";
        out += to_string(face[i]);
    }
    return out + "}";
}

}  // namespace tverberg
