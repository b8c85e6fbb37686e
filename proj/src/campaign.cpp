#include <exception>
#include <stdexcept>

#include "tverberg/search.hpp"

namespace tverberg {

namespace {

struct TrialRecord
{
    SearchStatus status = SearchStatus::NotFound;
    std::exception_ptr error;
};

VerificationReport run_campaign(std::string tag, std::int64_t d, std::int64_t r, const std::vector<std::int64_t>& cards,
                                std::size_t trials, std::uint64_t seed_base, const CampaignOptions& options)
{
    if (d < 1 || r < 2)
        throw std::invalid_argument("campaigns need d >= 1 and r >= 2");
    if (cards.empty())
        throw std::invalid_argument("at least one color class is required");
    if (trials < 1)
        throw std::invalid_argument("at least one trial is required");

    VerificationReport report;
    report.theorem_tag = std::move(tag);
    report.d = d;
    report.r = r;
    report.cards = cards;
    report.seed_base = seed_base;
    report.instances = trials;

    const auto start = std::chrono::steady_clock::now();
    std::vector<TrialRecord> records(trials);

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, options.workers)) if (options.workers > 1)
    for (std::size_t i = 0; i < trials; ++i)
    {
        try
        {
            const auto config = random_configuration(static_cast<int>(d), cards, seed_base + i);
            SearchOptions search;
            search.deadline = std::chrono::steady_clock::now()
                              + std::chrono::duration_cast<std::chrono::steady_clock::duration>(options.time_budget);
            records[i].status = find_colored_tverberg_serial(config, static_cast<int>(r), search).status;
        }
        catch (...)
        {
            records[i].error = std::current_exception();
        }
    }

    for (std::size_t i = 0; i < trials; ++i)
    {
        if (records[i].error)
            std::rethrow_exception(records[i].error);
        if (records[i].status == SearchStatus::Found)
        {
            ++report.found;
            continue;
        }
        if (records[i].status == SearchStatus::Timeout)
            ++report.timeouts;
        TrialFailure failure;
        failure.seed = seed_base + i;
        failure.status = records[i].status;
        failure.configuration = random_configuration(static_cast<int>(d), cards, failure.seed);
        failure.digest = configuration_digest(failure.configuration);
        report.failures.push_back(std::move(failure));
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace

VerificationReport verify_theorem_instance(Theorem theorem, std::int64_t d, std::int64_t r,
                                           const std::vector<std::int64_t>& cards, std::size_t trials,
                                           std::uint64_t seed_base, const CampaignOptions& options)
{
    if (!hypotheses_hold(theorem, d, r, cards))
        throw std::invalid_argument("cards do not satisfy the hypotheses of '" + theorem_name(theorem) + "'");
    return run_campaign(theorem_name(theorem), d, r, cards, trials, seed_base, options);
}

VerificationReport hunt_counterexample(std::int64_t d, std::int64_t r, const std::vector<std::int64_t>& cards,
                                       std::size_t trials, std::uint64_t seed_base, const CampaignOptions& options)
{
    return run_campaign("hunt", d, r, cards, trials, seed_base, options);
}

}  // namespace tverberg
