// Command-line front end: chessboard homology, the guarantee criterion, and
// Tverberg search/verification campaigns. Exit codes: 0 success, 1
// mathematical negative, 2 usage or parse error, 3 resource budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tverberg/complex.hpp"
#include "tverberg/criterion.hpp"
#include "tverberg/digest.hpp"
#include "tverberg/homology.hpp"
#include "tverberg/io.hpp"
#include "tverberg/search.hpp"

using namespace tverberg;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct Common
{
    bool json_only = false;
    int workers = 1;
    std::size_t face_budget = kDefaultFaceBudget;
    std::size_t snf_budget = HomologyOptions{}.snf_column_budget;
    double time_budget = 60.0;
};

template <class T>
T env_or(const char* name, T fallback)
{
    const char* raw = std::getenv(name);
    if (!raw || !*raw)
        return fallback;
    std::istringstream in(raw);
    T value{};
    if (!(in >> value) || value <= 0)
        throw std::invalid_argument(std::string("environment variable ") + name + " must be a positive number");
    return value;
}

std::string join_numbers(const std::vector<std::int64_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

void emit(const RunManifest& manifest, const Json& result, const std::vector<std::string>& summary, bool json_only)
{
    Json doc{{"manifest", manifest.to_json()}, {"result", result}};
    std::cout << doc.dump(2) << "\n";
    if (json_only)
        return;
    std::cout << "\n# summary\n";
    for (const auto& line : summary)
        std::cout << "# " << line << "\n";
}

int cmd_chessboard(int m, int n, const std::vector<std::string>& coeff_names, const Common& common)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("chessboard dimensions must be >= 1");
    const auto complex = chessboard(m, n, common.face_budget);
    HomologyOptions options;
    options.snf_column_budget = common.snf_budget;
    options.workers = common.workers;

    std::vector<Coefficients> coeffs;
    for (const auto& name : coeff_names)
        coeffs.push_back(Coefficients::parse(name));
    if (coeffs.empty())
        coeffs = default_coefficients(complex, options);

    const auto estimate = homological_connectivity(complex, coeffs, options);
    const auto formula = chessboard_connectivity_formula(m, n);

    bool vanishing = true;
    bool sharp = false;
    const bool sharp_applicable = formula + 1 <= complex.dim();
    for (const auto& profile : estimate.profiles)
    {
        for (int k = 0; k <= formula && k <= complex.dim(); ++k)
            vanishing = vanishing && !profile.nonzero(k);
        sharp = sharp || profile.nonzero(static_cast<int>(formula) + 1);
    }
    std::string verdict;
    if (m == 1 && n == 1)
        verdict = "degenerate";
    else
        verdict = vanishing && (sharp || !sharp_applicable) ? "agree" : "disagree";

    RunManifest manifest;
    manifest.command = "chessboard";
    manifest.parameters = Json{{"m", m}, {"n", n}, {"coefficients", coeff_names},
                               {"face_budget", common.face_budget}, {"snf_budget", common.snf_budget}};

    Json profiles = Json::array();
    for (const auto& p : estimate.profiles)
        profiles.push_back(to_json(p));
    Json result{{"f_vector", f_vector(complex)},
                {"dim", complex.dim()},
                {"homology", profiles},
                {"connectivity", to_json(estimate)},
                {"formula", formula},
                {"vanishing", vanishing},
                {"sharp", sharp_applicable ? Json(sharp) : Json(nullptr)},
                {"agreement", verdict}};

    std::vector<std::string> summary;
    summary.push_back("chessboard complex " + std::to_string(m) + "x" + std::to_string(n) + ", dim "
                      + std::to_string(complex.dim()) + ", " + std::to_string(complex.face_count()) + " faces");
    for (const auto& p : estimate.profiles)
    {
        std::string line = "reduced Betti over " + p.coefficients.name() + ":";
        for (auto b : p.reduced_betti)
            line += " " + std::to_string(b);
        for (std::size_t k = 0; k < p.torsion.size(); ++k)
            for (const auto& t : p.torsion[k])
                line += " [torsion Z/" + t.str() + " in degree " + std::to_string(k) + "]";
        summary.push_back(line);
    }
    summary.push_back("homological connectivity: "
                      + (estimate.hconn ? std::to_string(*estimate.hconn) : std::string("all-vanishing"))
                      + ", formula: " + std::to_string(formula) + ", agreement: " + verdict);
    emit(manifest, result, summary, common.json_only);
    return verdict == "disagree" ? kNegative : kOk;
}

int cmd_criterion(std::int64_t d, std::int64_t r, const std::vector<std::int64_t>& cards, const Common& common)
{
    CriterionInput input{d, r, cards};
    const auto report = guarantee_criterion(input);
    RunManifest manifest;
    manifest.command = "criterion";
    manifest.parameters = Json{{"d", d}, {"r", r}, {"cards", cards}};
    std::vector<std::string> summary{
        "d=" + std::to_string(d) + " r=" + std::to_string(r) + " cards=" + join_numbers(cards),
        std::string("r prime power: ") + (report.applicable ? "yes" : "no"),
        "join connectivity >= " + std::to_string(report.join_conn_lower) + " (needs "
            + std::to_string(report.required_conn) + "), sphere index " + std::to_string(report.sphere_index),
        std::string("guaranteed: ") + (report.guaranteed ? "yes" : "no") + ", tag: " + tag_name(report.tag)};
    emit(manifest, to_json(report), summary, common.json_only);
    return report.guaranteed ? kOk : kNegative;
}

int emit_campaign(const std::string& command, const VerificationReport& report, std::uint64_t seed,
                  std::size_t trials, const Common& common)
{
    RunManifest manifest;
    manifest.command = command;
    manifest.parameters = Json{{"theorem", report.theorem_tag}, {"d", report.d},     {"r", report.r},
                               {"cards", report.cards},        {"trials", trials},   {"seed", seed},
                               {"time_budget_secs", common.time_budget}};
    std::vector<std::string> summary{
        report.theorem_tag + ": found " + std::to_string(report.found) + "/" + std::to_string(report.instances)
        + " (timeouts " + std::to_string(report.timeouts) + ")"};
    for (const auto& f : report.failures)
        summary.push_back("seed " + std::to_string(f.seed) + " " + status_name(f.status) + " digest " + f.digest);
    emit(manifest, to_json(report), summary, common.json_only);
    return report.found == report.instances ? kOk : kNegative;
}

CampaignOptions campaign_options(const Common& common)
{
    CampaignOptions options;
    options.workers = common.workers;
    options.time_budget = std::chrono::duration<double>(common.time_budget);
    return options;
}

int cmd_find(const std::string& path, int r, const Common& common)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    ColoredConfiguration config;
    try
    {
        config = parse_configuration(text);
    }
    catch (const ParseError& e)
    {
        if (e.line() > 0)
            std::cerr << path << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
        else
            std::cerr << path << ": " << e.what() << "\n";
        return kUsage;
    }

    SearchOptions options;
    options.workers = common.workers;
    options.deadline = std::chrono::steady_clock::now()
                       + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(common.time_budget));
    const auto outcome = find_colored_tverberg(config, r, options);

    RunManifest manifest;
    manifest.command = "find";
    manifest.parameters = Json{{"config", path}, {"r", r}, {"time_budget_secs", common.time_budget}};
    manifest.input_digests[path] = fnv1a_hex(text);
    Json result{{"status", status_name(outcome.status)}};
    std::vector<std::string> summary;
    if (outcome.result)
    {
        result["partition"] = to_json(*outcome.result);
        std::string line = "partition:";
        for (const auto& f : outcome.result->partition.faces)
        {
            line += " {";
            for (std::size_t i = 0; i < f.vertices.size(); ++i)
                line += (i ? "," : "") + std::to_string(f.vertices[i]);
            line += "}";
        }
        summary.push_back(line);
        std::string point = "common point: (";
        for (std::size_t i = 0; i < outcome.result->witness.common_point.dim(); ++i)
            point += (i ? ", " : "") + to_string(outcome.result->witness.common_point.coords[i]);
        summary.push_back(point + ")");
    }
    else
        summary.push_back(outcome.status == SearchStatus::Timeout ? "timeout" : "none");
    emit(manifest, result, summary, common.json_only);
    switch (outcome.status)
    {
        case SearchStatus::Found: return kOk;
        case SearchStatus::NotFound: return kNegative;
        case SearchStatus::Timeout: return kBudget;
    }
    return kNegative;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chessboard complexes, the colored Tverberg guarantee criterion, and exact Tverberg search"};
    app.require_subcommand(1);
    Common common;

    try
    {
        common.face_budget = env_or<std::size_t>("TVB_FACE_BUDGET", common.face_budget);
        common.time_budget = env_or<double>("TVB_TIME_BUDGET_SECS", common.time_budget);
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json-only", common.json_only, "Suppress the summary block");
        sub->add_option("--workers", common.workers, "Worker threads")->check(CLI::PositiveNumber);
    };

    int m = 0, n = 0;
    std::vector<std::string> coeffs;
    auto* chess = app.add_subcommand("chessboard", "Homology and connectivity of a chessboard complex");
    chess->add_option("m", m, "Rows")->required();
    chess->add_option("n", n, "Columns")->required();
    chess->add_option("--coeff", coeffs, "Coefficients: Q, Z or Zp (repeatable)");
    chess->add_option("--face-budget", common.face_budget, "Maximum number of faces");
    chess->add_option("--snf-budget", common.snf_budget, "Maximum columns for integer Smith form");
    add_common(chess);

    std::int64_t d = 0, r = 0;
    std::vector<std::int64_t> cards;
    auto* crit = app.add_subcommand("criterion", "Evaluate the connectivity/index guarantee");
    crit->add_option("-d", d, "Ambient dimension")->required();
    crit->add_option("-r", r, "Number of parts")->required();
    crit->add_option("--cards", cards, "Color class sizes, comma separated")->required()->delimiter(',');
    add_common(crit);

    std::string theorem;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "Seeded verification campaign for a theorem");
    verify->add_option("--theorem", theorem, "zv, thm42, thm51, optimal or bl")->required();
    verify->add_option("-d", d, "Ambient dimension")->required();
    verify->add_option("-r", r, "Number of parts")->required();
    verify->add_option("--cards", cards, "Color class sizes")->required()->delimiter(',');
    verify->add_option("--trials", trials, "Number of trials")->required();
    verify->add_option("--seed", seed, "Base seed (trial i uses seed + i)")->required();
    verify->add_option("--time-budget", common.time_budget, "Seconds per trial");
    add_common(verify);

    auto* hunt = app.add_subcommand("hunt", "Seeded campaign without hypothesis checks");
    hunt->add_option("-d", d, "Ambient dimension")->required();
    hunt->add_option("-r", r, "Number of parts")->required();
    hunt->add_option("--cards", cards, "Color class sizes")->required()->delimiter(',');
    hunt->add_option("--trials", trials, "Number of trials")->required();
    hunt->add_option("--seed", seed, "Base seed (trial i uses seed + i)")->required();
    hunt->add_option("--time-budget", common.time_budget, "Seconds per trial");
    add_common(hunt);

    std::string config_path;
    int parts = 0;
    auto* find = app.add_subcommand("find", "Search one configuration file for a rainbow Tverberg partition");
    find->add_option("config", config_path, "Configuration document")->required();
    find->add_option("-r", parts, "Number of parts")->required();
    find->add_option("--time-budget", common.time_budget, "Seconds");
    add_common(find);

    int rand_d = 0;
    auto* random = app.add_subcommand("random", "Write a seeded general-position configuration");
    random->add_option("-d", rand_d, "Ambient dimension")->required();
    random->add_option("--cards", cards, "Color class sizes")->required()->delimiter(',');
    random->add_option("--seed", seed, "Seed")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try
    {
        if (*chess)
            return cmd_chessboard(m, n, coeffs, common);
        if (*crit)
            return cmd_criterion(d, r, cards, common);
        if (*verify)
        {
            const auto t = parse_theorem(theorem);
            if (!t)
                throw std::invalid_argument("unknown theorem '" + theorem + "'");
            return emit_campaign("verify", verify_theorem_instance(*t, d, r, cards, trials, seed, campaign_options(common)),
                                 seed, trials, common);
        }
        if (*hunt)
            return emit_campaign("hunt", hunt_counterexample(d, r, cards, trials, seed, campaign_options(common)), seed,
                                 trials, common);
        if (*find)
            return cmd_find(config_path, parts, common);
        if (*random)
        {
            std::cout << to_json(random_configuration(rand_d, cards, seed)).dump(2) << "\n";
            return kOk;
        }
    }
    catch (const BudgetExceeded& e)
    {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    catch (const std::out_of_range& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
