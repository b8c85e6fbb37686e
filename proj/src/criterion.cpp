#include "tverberg/criterion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tverberg {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t q = 2; q * q <= n; ++q)
        if (n % q == 0)
            return false;
    return true;
}

std::optional<PrimePower> is_prime_power(std::int64_t r)
{
    if (r < 2)
        throw std::invalid_argument("prime-power test needs r >= 2, got " + std::to_string(r));
    std::int64_t p = r;
    for (std::int64_t q = 2; q * q <= r; ++q)
        if (r % q == 0)
        {
            p = q;
            break;
        }
    int exponent = 0;
    while (r % p == 0)
    {
        r /= p;
        ++exponent;
    }
    if (r != 1)
        return std::nullopt;
    return PrimePower{p, exponent};
}

std::int64_t tverberg_number(std::int64_t d, std::int64_t r) { return (r - 1) * (d + 1); }

std::int64_t sphere_index(std::int64_t d, std::int64_t r) { return (r - 1) * (d + 1); }

std::int64_t chessboard_connectivity_formula(std::int64_t m, std::int64_t n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("chessboard connectivity formula needs m, n >= 1");
    return std::min({m, n, (m + n + 1) / 3}) - 2;
}

std::int64_t factor_connectivity(std::int64_t cardinality, std::int64_t r)
{
    return cardinality == 0 ? -2 : chessboard_connectivity_formula(cardinality, r);
}

std::int64_t join_connectivity_lower_bound(std::span<const std::int64_t> conn_values)
{
    if (conn_values.empty())
        throw std::invalid_argument("join connectivity bound needs at least one factor");
    return std::accumulate(conn_values.begin(), conn_values.end(), std::int64_t{0})
           + 2 * static_cast<std::int64_t>(conn_values.size() - 1);
}

std::string theorem_name(Theorem t)
{
    switch (t)
    {
        case Theorem::ZivaljevicVrecica: return "zv";
        case Theorem::GeneralizedZV: return "thm42";
        case Theorem::FlexibleCardinalities: return "thm51";
        case Theorem::OptimalColored: return "optimal";
        case Theorem::BaranyLarman: return "bl";
    }
    return "?";
}

std::optional<Theorem> parse_theorem(const std::string& name)
{
    for (auto t : {Theorem::ZivaljevicVrecica, Theorem::GeneralizedZV, Theorem::FlexibleCardinalities,
                   Theorem::OptimalColored, Theorem::BaranyLarman})
        if (theorem_name(t) == name)
            return t;
    return std::nullopt;
}

std::string tag_name(CriterionTag t)
{
    switch (t)
    {
        case CriterionTag::ZivaljevicVrecica: return "zv";
        case CriterionTag::GeneralizedZV: return "thm42";
        case CriterionTag::FlexibleCardinalities: return "thm51";
        case CriterionTag::FormulaOnly: return "formula-only";
        case CriterionTag::None: return "none";
    }
    return "?";
}

void CriterionInput::validate() const
{
    if (d < 1)
        throw std::invalid_argument("d must be >= 1");
    if (r < 2)
        throw std::invalid_argument("r must be >= 2");
    if (cards.empty())
        throw std::invalid_argument("at least one color class is required");
    for (auto c : cards)
        if (c < 0)
            throw std::invalid_argument("color class cardinalities must be nonnegative");
}

namespace {

// Largest d+1 classes in decreasing order, padded with empty classes.
std::vector<std::int64_t> best_classes(std::int64_t d, std::span<const std::int64_t> cards)
{
    std::vector<std::int64_t> sorted(cards.begin(), cards.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    sorted.resize(static_cast<std::size_t>(d + 1), 0);
    return sorted;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a <= 0 ? 0 : (a + b - 1) / b; }

// Depth-first over x-vectors in lexicographic order, starting each x_i at the
// least value its class needs.
bool search_x(std::span<const std::int64_t> chosen, std::int64_t d, std::int64_t r, std::size_t i, std::int64_t budget,
              std::vector<std::int64_t>& x)
{
    if (i == chosen.size())
        return true;
    if (chosen[i] < 1)
        return false;
    for (std::int64_t xi = ceil_div(2 * r - 1 - chosen[i], 3); 2 * xi + 1 <= r && xi <= budget; ++xi)
    {
        x[i] = xi;
        if (search_x(chosen, d, r, i + 1, budget - xi, x))
            return true;
    }
    return false;
}

}  // namespace

bool hypotheses_hold(Theorem t, std::int64_t d, std::int64_t r, std::span<const std::int64_t> cards,
                     std::vector<std::int64_t>* x_out)
{
    if (d < 1 || r < 2 || cards.empty())
        return false;
    const auto need_nonempty = [](std::int64_t bound) { return std::max<std::int64_t>(bound, 1); };
    switch (t)
    {
        case Theorem::ZivaljevicVrecica:
        {
            if (!is_prime_power(r))
                return false;
            const auto best = best_classes(d, cards);
            return best.back() >= need_nonempty(2 * r - 1);
        }
        case Theorem::GeneralizedZV:
        {
            if (!is_prime_power(r))
                return false;
            const auto best = best_classes(d, cards);
            return best.front() >= need_nonempty(2 * r - 1) && best.back() >= need_nonempty(2 * r - 4);
        }
        case Theorem::FlexibleCardinalities:
        {
            if (!is_prime_power(r))
                return false;
            // The largest classes need the smallest x values, so they are the ones to select.
            std::vector<std::size_t> order(cards.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return cards[a] > cards[b]; });
            order.resize(std::min(order.size(), static_cast<std::size_t>(d + 1)));
            if (order.size() < static_cast<std::size_t>(d + 1))
                return false;
            std::sort(order.begin(), order.end());
            std::vector<std::int64_t> chosen;
            for (auto idx : order)
                chosen.push_back(cards[idx]);
            std::vector<std::int64_t> x(chosen.size(), 0);
            if (!search_x(chosen, d, r, 0, d, x))
                return false;
            if (x_out)
            {
                x_out->assign(cards.size(), 0);
                for (std::size_t i = 0; i < order.size(); ++i)
                    (*x_out)[order[i]] = x[i];
            }
            return true;
        }
        case Theorem::OptimalColored:
        {
            if (!is_prime(r))
                return false;
            std::int64_t total = 0;
            for (auto c : cards)
            {
                if (c < 1 || c > r - 1)
                    return false;
                total += c;
            }
            return total >= tverberg_number(d, r) + 1;
        }
        case Theorem::BaranyLarman:
        {
            if (!is_prime(r + 1))
                return false;
            const auto best = best_classes(d, cards);
            return best.back() >= r;
        }
    }
    return false;
}

CriterionReport guarantee_criterion(const CriterionInput& input)
{
    input.validate();
    CriterionReport report;
    report.decomposition = is_prime_power(input.r);
    report.applicable = report.decomposition.has_value();
    for (auto c : input.cards)
        report.conn_per_factor.push_back(factor_connectivity(c, input.r));
    report.join_conn_lower = join_connectivity_lower_bound(report.conn_per_factor);
    report.sphere_index = sphere_index(input.d, input.r);
    report.required_conn = report.sphere_index - 1;
    // Index of the join is at least its connectivity + 2; it must exceed the sphere index.
    report.guaranteed = report.applicable && report.join_conn_lower + 2 > report.sphere_index;

    std::vector<std::int64_t> x;
    const bool flexible = hypotheses_hold(Theorem::FlexibleCardinalities, input.d, input.r, input.cards, &x);
    if (flexible)
        report.x_vector = x;
    if (hypotheses_hold(Theorem::ZivaljevicVrecica, input.d, input.r, input.cards))
        report.tag = CriterionTag::ZivaljevicVrecica;
    else if (hypotheses_hold(Theorem::GeneralizedZV, input.d, input.r, input.cards))
        report.tag = CriterionTag::GeneralizedZV;
    else if (flexible)
        report.tag = CriterionTag::FlexibleCardinalities;
    else
        report.tag = report.guaranteed ? CriterionTag::FormulaOnly : CriterionTag::None;
    return report;
}

}  // namespace tverberg
