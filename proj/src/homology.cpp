#include "tverberg/homology.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tverberg {

namespace {

bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

}  // namespace

Coefficients Coefficients::prime_field(std::int64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("coefficient modulus " + std::to_string(p) + " is not prime");
    if (p >= (std::int64_t{1} << 31))
        throw std::invalid_argument("coefficient modulus " + std::to_string(p) + " is too large");
    return Coefficients(Kind::PrimeField, p);
}

Coefficients Coefficients::parse(const std::string& name)
{
    if (name == "Q")
        return rationals();
    if (name == "Z")
        return integers();
    if (name.size() > 1 && name[0] == 'Z' && name.find_first_not_of("0123456789", 1) == std::string::npos
        && name.size() < 12)
        return prime_field(std::stoll(name.substr(1)));
    throw std::invalid_argument("unknown coefficient system '" + name + "' (expected Q, Z or Zp)");
}

std::string Coefficients::name() const
{
    switch (kind_)
    {
        case Kind::Rationals: return "Q";
        case Kind::Integers: return "Z";
        case Kind::PrimeField: return "Z" + std::to_string(prime_);
    }
    return "?";
}

bool HomologyProfile::nonzero(int k) const
{
    if (k < 0 || static_cast<std::size_t>(k) >= reduced_betti.size())
        return false;
    return reduced_betti[static_cast<std::size_t>(k)] > 0
           || (static_cast<std::size_t>(k) < torsion.size() && !torsion[static_cast<std::size_t>(k)].empty());
}

ChainBoundary boundary_matrix(const SimplicialComplex& complex, int k)
{
    if (k < 0 || k > complex.dim())
        throw std::out_of_range("boundary degree " + std::to_string(k) + " outside [0, "
                                + std::to_string(complex.dim()) + "]");
    ChainBoundary b;
    b.degree = k;
    b.rows = complex.faces_of_dim(k - 1).size();
    for (const auto& face : complex.faces_of_dim(k))
    {
        std::vector<std::pair<std::uint32_t, int>> column;
        column.reserve(face.size());
        for (std::size_t i = 0; i < face.size(); ++i)
        {
            Face facet;
            facet.reserve(face.size() - 1);
            for (std::size_t j = 0; j < face.size(); ++j)
                if (j != i)
                    facet.push_back(face[j]);
            const auto row = complex.index_of(facet);
            column.emplace_back(static_cast<std::uint32_t>(row), i % 2 == 0 ? 1 : -1);
        }
        std::sort(column.begin(), column.end());
        b.columns.push_back(std::move(column));
    }
    return b;
}

std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> compose(const ChainBoundary& a, const ChainBoundary& b)
{
    if (a.cols() != b.rows)
        throw std::invalid_argument("boundary matrices are not composable");
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> out;
    for (const auto& column : b.columns)
    {
        std::map<std::uint32_t, std::int64_t> acc;
        for (auto [j, v] : column)
            for (auto [i, w] : a.columns[j])
                acc[i] += static_cast<std::int64_t>(v) * w;
        std::vector<std::pair<std::uint32_t, std::int64_t>> nz;
        for (auto [i, v] : acc)
            if (v != 0)
                nz.emplace_back(i, v);
        out.push_back(std::move(nz));
    }
    return out;
}

namespace {

struct Overflow
{
};

std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow{};
    return r;
}
std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow{};
    return r;
}
std::int64_t abs_value(std::int64_t a)
{
    if (a == std::numeric_limits<std::int64_t>::min())
        throw Overflow{};
    return a < 0 ? -a : a;
}
std::int64_t gcd_value(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
Integer to_integer(std::int64_t a) { return Integer(a); }

Integer mul(const Integer& a, const Integer& b) { return a * b; }
Integer sub(const Integer& a, const Integer& b) { return a - b; }
Integer abs_value(const Integer& a) { return boost::multiprecision::abs(a); }
Integer gcd_value(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
Integer to_integer(const Integer& a) { return a; }

enum class Mode { PrimeField, Integers, Rationals };

std::int64_t mod_inverse(std::int64_t a, std::int64_t p)
{
    // Fermat: a^(p-2) mod p.
    std::int64_t result = 1, base = a % p, e = p - 2;
    while (e > 0)
    {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

/**
 * Column reduction against previously chosen pivots, in column order.
 *
 * A reduced column picks a pivot row among its entries: any entry over Z/p,
 * the smallest absolute value over Q (fraction-free updates), and only a
 * unit over Z. Pivot columns are reduced against every earlier pivot, so
 * eliminating in pivot-creation order terminates. Over Z, columns without a
 * unit entry are set aside and their Smith form is taken densely at the end;
 * all column operations there are unimodular.
 */
template <class T>
class ColumnReducer
{
    public:
        ColumnReducer(Mode mode, std::int64_t prime, std::size_t rows)
            : mode_(mode), prime_(prime), pivot_of_row_(rows, -1), work_(rows, T(0)), touched_flag_(rows, 0)
        {
        }

        void add_column(const std::vector<std::pair<std::uint32_t, int>>& input)
        {
            std::vector<std::pair<std::uint32_t, T>> column;
            column.reserve(input.size());
            for (auto [row, v] : input)
                column.emplace_back(row, mode_ == Mode::PrimeField ? T((v % prime_ + prime_) % prime_) : T(v));
            auto reduced = reduce(column);
            if (reduced.empty())
                return;

            std::ptrdiff_t chosen = -1;
            switch (mode_)
            {
                case Mode::PrimeField: chosen = 0; break;
                case Mode::Integers:
                    for (std::size_t i = 0; i < reduced.size(); ++i)
                        if (abs_value(reduced[i].second) == 1)
                        {
                            chosen = static_cast<std::ptrdiff_t>(i);
                            break;
                        }
                    break;
                case Mode::Rationals:
                {
                    T content = 0;
                    for (const auto& [row, v] : reduced)
                        content = gcd_value(content, abs_value(v));
                    chosen = 0;
                    for (std::size_t i = 0; i < reduced.size(); ++i)
                    {
                        reduced[i].second /= content;
                        if (abs_value(reduced[i].second) < abs_value(reduced[static_cast<std::size_t>(chosen)].second))
                            chosen = static_cast<std::ptrdiff_t>(i);
                    }
                    break;
                }
            }
            if (chosen < 0)
            {
                residual_.push_back(std::move(reduced));
                return;
            }
            const auto row = reduced[static_cast<std::size_t>(chosen)].first;
            const T value = reduced[static_cast<std::size_t>(chosen)].second;
            pivot_of_row_[row] = static_cast<std::int64_t>(pivots_.size());
            pivots_.push_back(Pivot{row, value, std::move(reduced)});
        }

        RankResult finish()
        {
            RankResult result;
            result.rank = pivots_.size();
            if (residual_.empty())
                return result;

            // Later pivots may sit on rows where a residual column is nonzero.
            std::map<std::uint32_t, std::size_t> row_index;
            std::vector<std::vector<std::pair<std::uint32_t, T>>> cleaned;
            for (const auto& column : residual_)
            {
                auto again = reduce(column);
                if (again.empty())
                    continue;
                for (const auto& [row, v] : again)
                    row_index.emplace(row, 0);
                cleaned.push_back(std::move(again));
            }
            std::size_t next = 0;
            for (auto& [row, idx] : row_index)
                idx = next++;
            std::vector<std::vector<Integer>> dense(row_index.size(), std::vector<Integer>(cleaned.size(), Integer(0)));
            for (std::size_t c = 0; c < cleaned.size(); ++c)
                for (const auto& [row, v] : cleaned[c])
                    dense[row_index[row]][c] = to_integer(v);
            for (auto& d : smith_diagonal(std::move(dense)))
            {
                ++result.rank;
                if (d > 1)
                    result.torsion.push_back(d);
            }
            return result;
        }

    private:
        struct Pivot
        {
            std::uint32_t row;
            T value;
            std::vector<std::pair<std::uint32_t, T>> column;
        };

        Mode mode_;
        std::int64_t prime_;
        std::vector<std::int64_t> pivot_of_row_;
        std::vector<Pivot> pivots_;
        std::vector<std::vector<std::pair<std::uint32_t, T>>> residual_;

        std::vector<T> work_;
        std::vector<std::uint32_t> touched_;
        std::vector<char> touched_flag_;

        void touch(std::uint32_t row)
        {
            if (!touched_flag_[row])
            {
                touched_flag_[row] = 1;
                touched_.push_back(row);
            }
        }

        std::vector<std::pair<std::uint32_t, T>> reduce(const std::vector<std::pair<std::uint32_t, T>>& column)
        {
            using Entry = std::pair<std::int64_t, std::uint32_t>;
            std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pending;
            for (const auto& [row, v] : column)
            {
                work_[row] = v;
                touch(row);
                if (pivot_of_row_[row] >= 0)
                    pending.emplace(pivot_of_row_[row], row);
            }
            while (!pending.empty())
            {
                const auto [index, row] = pending.top();
                pending.pop();
                if (work_[row] == 0)
                    continue;
                const Pivot& pivot = pivots_[static_cast<std::size_t>(index)];
                const T c = work_[row];
                switch (mode_)
                {
                    case Mode::PrimeField:
                    {
                        const T factor = c * mod_inverse(static_cast<std::int64_t>(pivot.value), prime_) % prime_;
                        for (const auto& [r, v] : pivot.column)
                        {
                            touch(r);
                            work_[r] = ((work_[r] - factor * v) % prime_ + prime_) % prime_;
                        }
                        break;
                    }
                    case Mode::Integers:
                    {
                        const T factor = mul(c, pivot.value);  // pivot.value is a unit
                        for (const auto& [r, v] : pivot.column)
                        {
                            touch(r);
                            work_[r] = sub(work_[r], mul(factor, v));
                        }
                        break;
                    }
                    case Mode::Rationals:
                    {
                        const T g = gcd_value(abs_value(c), abs_value(pivot.value));
                        const T scale = pivot.value / g;
                        const T factor = c / g;
                        if (scale != 1)
                            for (auto r : touched_)
                                work_[r] = mul(work_[r], scale);
                        for (const auto& [r, v] : pivot.column)
                        {
                            touch(r);
                            work_[r] = sub(work_[r], mul(factor, v));
                        }
                        break;
                    }
                }
                for (const auto& [r, v] : pivot.column)
                    if (pivot_of_row_[r] >= 0 && work_[r] != 0)
                        pending.emplace(pivot_of_row_[r], r);
            }
            std::sort(touched_.begin(), touched_.end());
            std::vector<std::pair<std::uint32_t, T>> out;
            for (auto r : touched_)
            {
                if (work_[r] != 0)
                    out.emplace_back(r, work_[r]);
                work_[r] = 0;
                touched_flag_[r] = 0;
            }
            touched_.clear();
            return out;
        }
};

template <class T>
RankResult run_reduction(const ChainBoundary& boundary, Mode mode, std::int64_t prime)
{
    ColumnReducer<T> reducer(mode, prime, boundary.rows);
    for (const auto& column : boundary.columns)
        reducer.add_column(column);
    return reducer.finish();
}

}  // namespace

RankResult boundary_rank(const ChainBoundary& boundary, const Coefficients& coefficients)
{
    switch (coefficients.kind())
    {
        case Coefficients::Kind::PrimeField:
            return run_reduction<std::int64_t>(boundary, Mode::PrimeField, coefficients.prime());
        case Coefficients::Kind::Integers:
        case Coefficients::Kind::Rationals:
        {
            const Mode mode = coefficients.kind() == Coefficients::Kind::Integers ? Mode::Integers : Mode::Rationals;
            try
            {
                return run_reduction<std::int64_t>(boundary, mode, 0);
            }
            catch (const Overflow&)
            {
                return run_reduction<Integer>(boundary, mode, 0);
            }
        }
    }
    return {};
}

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<Integer> diagonal;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t)
    {
        for (;;)
        {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc])))
                    {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows)
                return diagonal;
            std::swap(a[t], a[pr]);
            for (auto& row : a)
                std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
            {
                if (a[i][t] == 0)
                    continue;
                const Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                clean = clean && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j)
            {
                if (a[t][j] == 0)
                    continue;
                const Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                clean = clean && a[t][j] == 0;
            }
            if (!clean)
                continue;

            // Divisibility: fold a row with a non-multiple into the pivot row.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0)
                    {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                a[t][j] += a[bad][j];
        }
        diagonal.push_back(abs(a[t][t]));
    }
    return diagonal;
}

HomologyProfile betti_numbers(const SimplicialComplex& complex, const Coefficients& coefficients,
                              const HomologyOptions& options)
{
    if (complex.empty())
        throw std::invalid_argument("reduced homology of the empty complex is not computed here");
    const int dim = complex.dim();
    if (coefficients.kind() == Coefficients::Kind::Integers)
        for (int k = 0; k <= dim; ++k)
            if (complex.faces_of_dim(k).size() > options.snf_column_budget)
                throw BudgetExceeded("integer Smith form of a boundary with " + std::to_string(complex.faces_of_dim(k).size())
                                     + " columns exceeds the budget of " + std::to_string(options.snf_column_budget));

    std::vector<RankResult> ranks(static_cast<std::size_t>(dim) + 2);
    std::vector<std::exception_ptr> errors(ranks.size());

#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, options.workers)) if (options.workers > 1)
    for (int k = 0; k <= dim; ++k)
    {
        try
        {
            ranks[static_cast<std::size_t>(k)] = boundary_rank(boundary_matrix(complex, k), coefficients);
        }
        catch (...)
        {
            errors[static_cast<std::size_t>(k)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    HomologyProfile profile;
    profile.coefficients = coefficients;
    profile.torsion.resize(static_cast<std::size_t>(dim) + 1);
    for (int k = 0; k <= dim; ++k)
    {
        const auto uk = static_cast<std::size_t>(k);
        profile.reduced_betti.push_back(complex.faces_of_dim(k).size() - ranks[uk].rank - ranks[uk + 1].rank);
        profile.torsion[uk] = ranks[uk + 1].torsion;
    }
    return profile;
}

std::vector<Coefficients> default_coefficients(const SimplicialComplex& complex, const HomologyOptions& options)
{
    for (int k = 0; k <= complex.dim(); ++k)
        if (complex.faces_of_dim(k).size() > options.snf_column_budget)
            return {Coefficients::rationals(), Coefficients::prime_field(2), Coefficients::prime_field(3)};
    return {Coefficients::integers()};
}

ConnectivityEstimate homological_connectivity(const SimplicialComplex& complex,
                                              const std::vector<Coefficients>& coefficients,
                                              const HomologyOptions& options)
{
    if (coefficients.empty())
        throw std::invalid_argument("at least one coefficient system is required");
    ConnectivityEstimate estimate;
    estimate.coefficients_tried = coefficients;
    if (complex.empty())
    {
        estimate.hconn = -2;
        estimate.witness_degree = -1;
        return estimate;
    }
    for (const auto& c : coefficients)
    {
        auto profile = betti_numbers(complex, c, options);
        for (int k = 0; k <= complex.dim(); ++k)
            if (profile.nonzero(k))
            {
                if (!estimate.witness_degree || k < *estimate.witness_degree)
                    estimate.witness_degree = k;
                break;
            }
        estimate.profiles.push_back(std::move(profile));
    }
    if (estimate.witness_degree)
        estimate.hconn = *estimate.witness_degree - 1;
    return estimate;
}

ConnectivityEstimate homological_connectivity(const SimplicialComplex& complex, const HomologyOptions& options)
{
    return homological_connectivity(complex, default_coefficients(complex, options), options);
}

std::int64_t euler_characteristic(const SimplicialComplex& complex)
{
    std::int64_t chi = 0;
    for (int k = 0; k <= complex.dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(complex.faces_of_dim(k).size());
    return chi;
}

}  // namespace tverberg
