#include "tverberg/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <stdexcept>

#include "tverberg/digest.hpp"

namespace tverberg {

std::string status_name(SearchStatus s)
{
    switch (s)
    {
        case SearchStatus::Found: return "found";
        case SearchStatus::NotFound: return "none";
        case SearchStatus::Timeout: return "timeout";
    }
    return "?";
}

std::vector<RainbowFace> enumerate_rainbow_faces(const ColoredConfiguration& config, int max_size)
{
    if (max_size < 1 || max_size > config.d + 1)
        throw std::invalid_argument("rainbow face size cap must lie in [1, d+1], got " + std::to_string(max_size));
    const auto color = config.color_of();
    const std::size_t n = config.points.size();
    std::vector<RainbowFace> out;
    RainbowFace current;
    std::vector<char> color_used(config.color_classes.size(), 0);

    // Preorder DFS over increasing vertex lists is lexicographic order.
    auto grow = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t v = from; v < n; ++v)
        {
            if (color_used[color[v]])
                continue;
            color_used[color[v]] = 1;
            current.vertices.push_back(v);
            out.push_back(current);
            if (current.vertices.size() < static_cast<std::size_t>(max_size))
                self(self, v + 1);
            current.vertices.pop_back();
            color_used[color[v]] = 0;
        }
    };
    grow(grow, 0);
    for (auto& f : out)
    {
        for (auto v : f.vertices)
            f.colors.push_back(color[v]);
        std::sort(f.colors.begin(), f.colors.end());
    }
    return out;
}

namespace {

struct TimedOut
{
};

struct Box
{
    std::vector<Rational> lo, hi;
};

struct Prepared
{
    const ColoredConfiguration* config = nullptr;
    int r = 0;
    std::vector<RainbowFace> faces;
    std::vector<std::uint64_t> masks;
    std::vector<Box> boxes;
    // first_after[v]: first face whose smallest vertex exceeds v.
    std::vector<std::size_t> first_after;
    std::size_t points = 0;
};

Prepared prepare(const ColoredConfiguration& config, int r)
{
    if (r < 2)
        throw std::invalid_argument("r must be >= 2");
    config.validate();
    if (config.points.size() > 64)
        throw std::invalid_argument("exhaustive search supports at most 64 points");
    Prepared p;
    p.config = &config;
    p.r = r;
    p.points = config.points.size();
    if (p.points == 0)
        return p;
    p.faces = enumerate_rainbow_faces(config, config.d + 1);
    for (const auto& f : p.faces)
    {
        std::uint64_t mask = 0;
        Box box{config.points[f.vertices[0]].coords, config.points[f.vertices[0]].coords};
        for (auto v : f.vertices)
        {
            mask |= std::uint64_t{1} << v;
            const auto& c = config.points[v].coords;
            for (std::size_t k = 0; k < c.size(); ++k)
            {
                if (c[k] < box.lo[k])
                    box.lo[k] = c[k];
                if (c[k] > box.hi[k])
                    box.hi[k] = c[k];
            }
        }
        p.masks.push_back(mask);
        p.boxes.push_back(std::move(box));
    }
    p.first_after.assign(p.points, p.faces.size());
    for (std::size_t v = 0; v < p.points; ++v)
        for (std::size_t i = 0; i < p.faces.size(); ++i)
            if (p.faces[i].vertices[0] > v)
            {
                p.first_after[v] = i;
                break;
            }
    return p;
}

class Searcher
{
    public:
        Searcher(const Prepared& prepared, const SearchOptions& options) : p_(prepared), options_(options) {}

        /// Lexicographically first tuple whose first face is `first`.
        std::optional<TverbergResult> from_first_face(std::size_t first)
        {
            chosen_.assign(1, first);
            Box box = p_.boxes[first];
            if (!enough_vertices_left(p_.masks[first], p_.faces[first].vertices[0], 1))
                return std::nullopt;
            if (extend(p_.masks[first], box))
                return std::move(result_);
            return std::nullopt;
        }

        std::uint64_t lp_calls() const { return lp_calls_; }

    private:
        const Prepared& p_;
        const SearchOptions& options_;
        std::vector<std::size_t> chosen_;
        std::optional<TverbergResult> result_;
        std::uint64_t lp_calls_ = 0;

        bool enough_vertices_left(std::uint64_t used, std::size_t min_vertex, std::size_t depth) const
        {
            std::size_t free = 0;
            for (std::size_t v = min_vertex + 1; v < p_.points; ++v)
                if (!(used & (std::uint64_t{1} << v)))
                    ++free;
            return free >= static_cast<std::size_t>(p_.r) - depth;
        }

        static bool intersect(Box& acc, const Box& other)
        {
            for (std::size_t k = 0; k < acc.lo.size(); ++k)
            {
                if (other.lo[k] > acc.lo[k])
                    acc.lo[k] = other.lo[k];
                if (other.hi[k] < acc.hi[k])
                    acc.hi[k] = other.hi[k];
                if (acc.lo[k] > acc.hi[k])
                    return false;
            }
            return true;
        }

        std::optional<TverbergWitness> solve()
        {
            if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline)
                throw TimedOut{};
            ++lp_calls_;
            std::vector<std::vector<std::size_t>> faces;
            for (auto idx : chosen_)
                faces.push_back(p_.faces[idx].vertices);
            return common_point_feasible(p_.config->points, faces);
        }

        bool extend(std::uint64_t used, const Box& box)
        {
            const std::size_t depth = chosen_.size();
            const std::size_t prev_min = p_.faces[chosen_.back()].vertices[0];
            for (std::size_t i = p_.first_after[prev_min]; i < p_.faces.size(); ++i)
            {
                if (used & p_.masks[i])
                    continue;
                Box next = box;
                if (!intersect(next, p_.boxes[i]))
                    continue;
                const std::uint64_t now_used = used | p_.masks[i];
                if (depth + 1 < static_cast<std::size_t>(p_.r)
                    && !enough_vertices_left(now_used, p_.faces[i].vertices[0], depth + 1))
                    continue;
                chosen_.push_back(i);
                auto witness = solve();
                if (witness)
                {
                    if (depth + 1 == static_cast<std::size_t>(p_.r))
                    {
                        TverbergResult res;
                        for (auto idx : chosen_)
                            res.partition.faces.push_back(p_.faces[idx]);
                        res.witness = std::move(*witness);
                        result_ = std::move(res);
                        return true;
                    }
                    if (extend(now_used, next))
                        return true;
                }
                chosen_.pop_back();
            }
            return false;
        }
};

void check_result(const ColoredConfiguration& config, int r, const SearchOutcome& outcome)
{
    if (outcome.result && !verify_partition(config, r, *outcome.result))
        throw std::logic_error("search produced a partition that fails exact verification");
}

}  // namespace

SearchOutcome find_colored_tverberg_serial(const ColoredConfiguration& config, int r, const SearchOptions& options)
{
    const Prepared prepared = prepare(config, r);
    SearchOutcome outcome;
    Searcher searcher(prepared, options);
    try
    {
        for (std::size_t first = 0; first < prepared.faces.size(); ++first)
            if (auto found = searcher.from_first_face(first))
            {
                outcome.status = SearchStatus::Found;
                outcome.result = std::move(found);
                break;
            }
    }
    catch (const TimedOut&)
    {
        outcome.status = SearchStatus::Timeout;
    }
    outcome.lp_calls = searcher.lp_calls();
    check_result(config, r, outcome);
    return outcome;
}

SearchOutcome find_colored_tverberg(const ColoredConfiguration& config, int r, const SearchOptions& options)
{
    if (options.workers <= 1)
        return find_colored_tverberg_serial(config, r, options);

    const Prepared prepared = prepare(config, r);
    const std::size_t count = prepared.faces.size();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{none};
    std::atomic<std::size_t> first_timeout{none};
    std::atomic<std::uint64_t> lp_calls{0};
    std::vector<std::optional<TverbergResult>> results(count);
    std::vector<std::exception_ptr> errors(count);

    auto lower_to = [](std::atomic<std::size_t>& target, std::size_t value) {
        std::size_t cur = target.load();
        while (value < cur && !target.compare_exchange_weak(cur, value))
        {
        }
    };

#pragma omp parallel for schedule(dynamic, 1) num_threads(options.workers)
    for (std::size_t first = 0; first < count; ++first)
    {
        // Anything after a known hit cannot be the lexicographic minimum.
        if (first > best.load() || first > first_timeout.load())
            continue;
        Searcher searcher(prepared, options);
        try
        {
            if (auto found = searcher.from_first_face(first))
            {
                results[first] = std::move(found);
                lower_to(best, first);
            }
        }
        catch (const TimedOut&)
        {
            lower_to(first_timeout, first);
        }
        catch (...)
        {
            errors[first] = std::current_exception();
        }
        lp_calls += searcher.lp_calls();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    SearchOutcome outcome;
    outcome.lp_calls = lp_calls.load();
    if (best.load() != none && best.load() < first_timeout.load())
    {
        outcome.status = SearchStatus::Found;
        outcome.result = std::move(results[best.load()]);
    }
    else if (first_timeout.load() != none)
        outcome.status = SearchStatus::Timeout;
    check_result(config, r, outcome);
    return outcome;
}

SearchOutcome find_uncolored_tverberg(const std::vector<RationalPoint>& points, int d, int r,
                                      const SearchOptions& options)
{
    if (points.size() < static_cast<std::size_t>(std::max(r, 0)))
        return {};
    return find_colored_tverberg(uncolored_configuration(d, points), r, options);
}

bool verify_partition(const ColoredConfiguration& config, int r, const TverbergResult& result)
{
    const auto& faces = result.partition.faces;
    if (r < 2 || faces.size() != static_cast<std::size_t>(r))
        return false;
    const auto color = config.color_of();
    std::vector<char> used(config.points.size(), 0);
    std::vector<std::vector<std::size_t>> index_faces;
    for (std::size_t j = 0; j < faces.size(); ++j)
    {
        const auto& f = faces[j];
        if (f.vertices.empty() || f.vertices.size() > static_cast<std::size_t>(config.d) + 1)
            return false;
        if (j > 0 && faces[j - 1].vertices[0] >= f.vertices[0])
            return false;
        std::vector<std::size_t> colors;
        for (std::size_t i = 0; i < f.vertices.size(); ++i)
        {
            const auto v = f.vertices[i];
            if (v >= config.points.size() || used[v] || (i > 0 && f.vertices[i - 1] >= v))
                return false;
            used[v] = 1;
            colors.push_back(color[v]);
        }
        std::sort(colors.begin(), colors.end());
        if (std::adjacent_find(colors.begin(), colors.end()) != colors.end() || colors != f.colors)
            return false;
        index_faces.push_back(f.vertices);
    }
    return verify_witness(config.points, index_faces, result.witness);
}

std::string configuration_digest(const ColoredConfiguration& config)
{
    std::string text = "d=" + std::to_string(config.d) + ";";
    for (const auto& p : config.points)
    {
        for (const auto& c : p.coords)
            text += to_string(c) + ",";
        text += "|";
    }
    text += ";";
    for (const auto& cls : config.color_classes)
    {
        for (auto i : cls)
            text += std::to_string(i) + ",";
        text += "|";
    }
    return fnv1a_hex(text);
}

}  // namespace tverberg
