// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tverberg/criterion.hpp"
#include "tverberg/homology.hpp"
#include "tverberg/search.hpp"

using namespace tverberg;

namespace {

struct Check
{
    bool ok = true;
    std::ostringstream log;

    void expect(bool cond, const std::string& what)
    {
        if (!cond)
        {
            ok = false;
            log << "    " << what << "\n";
        }
    }
};

std::vector<Coefficients> fields()
{
    return {Coefficients::rationals(), Coefficients::prime_field(2), Coefficients::prime_field(3)};
}

std::vector<Coefficients> coefficients_for(int m, int n)
{
    if (m <= 5 && n <= 5)
        return {Coefficients::integers()};
    return fields();
}

std::string board(int m, int n) { return "Delta_{" + std::to_string(m) + "," + std::to_string(n) + "}"; }

void formula_vanishing(Check& c)
{
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n)
        {
            const auto k = chessboard(m, n);
            const auto f = chessboard_connectivity_formula(m, n);
            for (const auto& coeff : coefficients_for(m, n))
            {
                const auto h = betti_numbers(k, coeff);
                for (int deg = 0; deg <= f && deg <= k.dim(); ++deg)
                    c.expect(!h.nonzero(deg), board(m, n) + " nonzero over " + coeff.name() + " in degree " +
                                                  std::to_string(deg));
            }
        }
}

void formula_sharpness(Check& c)
{
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n)
        {
            if (m == 1 && n == 1)
                continue;
            const auto k = chessboard(m, n);
            const int deg = static_cast<int>(chessboard_connectivity_formula(m, n)) + 1;
            if (deg > k.dim())
                continue;
            auto coeffs = fields();
            coeffs.insert(coeffs.begin(), Coefficients::integers());
            bool nonzero = false;
            for (const auto& coeff : coeffs)
                if (betti_numbers(k, coeff).nonzero(deg))
                {
                    nonzero = true;
                    break;
                }
            c.expect(nonzero, board(m, n) + " vanishes in degree " + std::to_string(deg) + " over Z, Q, Z2 and Z3");
        }
}

void corollary_2r_minus_1(Check& c)
{
    for (int r : {2, 3, 4})
    {
        const auto est = homological_connectivity(chessboard(2 * r - 1, r));
        c.expect(est.hconn == r - 2, board(2 * r - 1, r) + " connectivity differs from r-2");
        c.expect(est.witness_degree == r - 1, board(2 * r - 1, r) + " has no nonzero group in degree r-1");
    }
}

void f_vectors(Check& c)
{
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n)
        {
            const auto f = f_vector(chessboard(m, n));
            c.expect(f.size() == static_cast<std::size_t>(std::min(m, n)) + 1, board(m, n) + " has the wrong dimension");
            for (int k = 0; k <= std::min(m, n) && static_cast<std::size_t>(k) < f.size(); ++k)
                c.expect(static_cast<std::int64_t>(f[static_cast<std::size_t>(k)]) == oracle::chessboard_faces(m, n, k),
                         board(m, n) + " f_" + std::to_string(k - 1));
        }
}

void join_kunneth(Check& c)
{
    const auto circle = betti_numbers(join(chessboard(2, 2), chessboard(2, 2)), Coefficients::rationals());
    c.expect(circle.reduced_betti == std::vector<std::size_t>{0, 1, 0, 0}, "Delta_{2,2} * Delta_{2,2} is not a circle");

    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int x = 1; x <= 3; ++x)
                for (int y = 1; y <= 3; ++y)
                {
                    const auto p = chessboard(a, b), q = chessboard(x, y);
                    const auto bp = betti_numbers(p, Coefficients::rationals()).reduced_betti;
                    const auto bq = betti_numbers(q, Coefficients::rationals()).reduced_betti;
                    const auto bj = betti_numbers(join(p, q), Coefficients::rationals()).reduced_betti;
                    for (std::size_t k = 0; k < bj.size(); ++k)
                    {
                        std::size_t expected = 0;
                        for (std::size_t i = 0; i < bp.size(); ++i)
                            if (k >= i + 1 && k - i - 1 < bq.size())
                                expected += bp[i] * bq[k - i - 1];
                        c.expect(bj[k] == expected, board(a, b) + " * " + board(x, y) + " degree " + std::to_string(k));
                    }
                }
}

void criterion_reproduction(Check& c)
{
    for (std::int64_t r = 3; r <= 9; ++r)
    {
        if (!is_prime_power(r))
            continue;
        for (std::int64_t d = 1; d <= 5; ++d)
        {
            std::vector<std::int64_t> cards{2 * r - 1};
            cards.resize(static_cast<std::size_t>(d + 1), 2 * r - 4);
            const auto rep = guarantee_criterion({d, r, cards});
            const std::string tag = "r=" + std::to_string(r) + " d=" + std::to_string(d);
            c.expect(rep.guaranteed, "cards (2r-1, 2r-4, ...) not guaranteed for " + tag);
            c.expect(rep.tag == CriterionTag::GeneralizedZV || rep.tag == CriterionTag::FlexibleCardinalities,
                     "unexpected tag " + tag_name(rep.tag) + " for " + tag);
        }
    }

    const auto two = guarantee_criterion({3, 9, {17, 17, 11, 14}});
    c.expect(two.guaranteed, "(17,17,11,14) not guaranteed");
    c.expect(two.tag == CriterionTag::FlexibleCardinalities, "(17,17,11,14) tag is " + tag_name(two.tag));
    c.expect(two.x_vector && 2 * 9 - 1 - 3 * (*two.x_vector)[2] == 11, "x_3 does not give |C_3| = 11");

    for (std::int64_t r = 3; r <= 20; ++r)
        for (std::int64_t d = 1; d <= 6; ++d)
        {
            c.expect(factor_connectivity(2 * r - 1, r) == r - 2, "conn Delta_{2r-1,r} for r=" + std::to_string(r));
            c.expect(factor_connectivity(2 * r - 4, r) == r - 3, "conn Delta_{2r-4,r} for r=" + std::to_string(r));
            std::vector<std::int64_t> values{r - 2};
            values.resize(static_cast<std::size_t>(d + 1), r - 3);
            c.expect(join_connectivity_lower_bound(values) == (d + 1) * (r - 1) - 1,
                     "(r-2) + d(r-3) join bound for r=" + std::to_string(r) + " d=" + std::to_string(d));
        }
}

// Runs the seeded trials directly so every returned witness is re-verified here.
void colored_campaign(Check& c, Theorem t, int d, int r, const std::vector<std::int64_t>& cards, std::size_t trials,
                      std::uint64_t seed_base)
{
    c.expect(hypotheses_hold(t, d, r, cards), theorem_name(t) + " hypotheses do not hold");
    SearchOptions opts;
    opts.workers = 4;
    std::size_t found = 0;
    for (std::size_t i = 0; i < trials; ++i)
    {
        const auto cfg = random_configuration(d, cards, seed_base + i);
        const auto out = find_colored_tverberg(cfg, r, opts);
        if (out.status == SearchStatus::Found && verify_partition(cfg, r, *out.result))
            ++found;
        else
            c.expect(false, theorem_name(t) + " seed " + std::to_string(seed_base + i) + ": " + status_name(out.status));
    }
    c.log << "    " << theorem_name(t) << ": " << found << "/" << trials << "\n";
}

void generalized_zv_campaign(Check& c) { colored_campaign(c, Theorem::GeneralizedZV, 2, 3, {5, 2, 2}, 200, 1); }

void zv_and_optimal_campaigns(Check& c)
{
    colored_campaign(c, Theorem::ZivaljevicVrecica, 2, 2, {3, 3, 3}, 100, 1);
    colored_campaign(c, Theorem::OptimalColored, 2, 3, {2, 2, 2, 1}, 100, 1);
}

void uncolored_campaign(Check& c)
{
    const std::vector<std::int64_t> ones(7, 1);
    std::size_t found = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed)
    {
        const auto cfg = random_configuration(2, ones, seed);
        const auto out = find_uncolored_tverberg(cfg.points, 2, 3);
        if (out.status == SearchStatus::Found && verify_partition(cfg, 3, *out.result))
            ++found;
        else
            c.expect(false, "seed " + std::to_string(seed) + ": " + status_name(out.status));
    }
    c.log << "    uncolored: " << found << "/100\n";
}

void oracle_equivalence(Check& c)
{
    std::mt19937_64 rng(20240611);
    std::size_t instances = 0, with_partition = 0;
    while (instances < 50)
    {
        const int d = 1 + static_cast<int>(rng() % 2);
        const int r = 2 + static_cast<int>(rng() % 2);
        std::vector<std::int64_t> cards(1 + rng() % 4);
        std::int64_t total = 0;
        for (auto& x : cards)
            total += x = static_cast<std::int64_t>(rng() % 4);
        if (total < r || total > 8)
            continue;
        const auto cfg = random_configuration(d, cards, rng());
        const std::string id = "instance " + std::to_string(instances);

        const auto serial = find_colored_tverberg_serial(cfg, r);
        SearchOptions four;
        four.workers = 4;
        const auto parallel = find_colored_tverberg(cfg, r, four);
        const auto naive = oracle::naive_tverberg(cfg, r, static_cast<std::size_t>(d + 1));

        c.expect((serial.status == SearchStatus::Found) == naive.has_value(), id + ": existence differs from oracle");
        c.expect(serial.status == parallel.status, id + ": serial and 4-worker status differ");
        if (serial.result && naive)
        {
            std::vector<std::vector<std::size_t>> faces;
            for (const auto& f : serial.result->partition.faces)
                faces.push_back(f.vertices);
            c.expect(faces == naive->faces, id + ": first partition differs from oracle");
            c.expect(serial.result->witness.common_point == naive->witness.common_point &&
                         serial.result->witness.coefficients == naive->witness.coefficients,
                     id + ": witness differs from oracle");
        }
        if (serial.result && parallel.result)
            c.expect(serial.result->partition == parallel.result->partition &&
                         serial.result->witness.coefficients == parallel.result->witness.coefficients &&
                         serial.result->witness.common_point == parallel.result->witness.common_point,
                     id + ": serial and 4-worker witnesses differ");
        with_partition += naive.has_value();
        ++instances;
    }
    c.log << "    " << with_partition << " of 50 instances admit a partition\n";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"connectivity formula vanishing, m,n <= 6", formula_vanishing},
        {"connectivity formula sharpness, m,n <= 6", formula_sharpness},
        {"conn Delta_{2r-1,r} = r-2 for r = 2,3,4", corollary_2r_minus_1},
        {"f-vector product formula, m,n <= 7", f_vectors},
        {"join Kunneth identities", join_kunneth},
        {"criterion reproduction of the worked examples", criterion_reproduction},
        {"colored Tverberg, d=2 r=3 cards (5,2,2), 200 trials", generalized_zv_campaign},
        {"ZV (3,3,3) and optimal colored (2,2,2,1), 100 trials each", zv_and_optimal_campaigns},
        {"uncolored Tverberg, 7 points d=2 r=3, 100 trials", uncolored_campaign},
        {"search agrees with the naive oracle, 50 instances", oracle_equivalence},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try
        {
            criteria[i].second(c);
        }
        catch (const std::exception& e)
        {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        failures += !c.ok;
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << std::fixed << std::setprecision(2) << dt.count() << " s)\n"
                  << c.log.str() << std::flush;
    }
    return failures == 0 ? 0 : 1;
}
