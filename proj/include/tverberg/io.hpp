#ifndef TVERBERG_IO_HPP
#define TVERBERG_IO_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tverberg/criterion.hpp"
#include "tverberg/geometry.hpp"
#include "tverberg/homology.hpp"
#include "tverberg/search.hpp"

namespace tverberg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Input problem. `line` and `column` are 1-based; both are 0 when the error
/// is structural rather than syntactic, and `path` names the offending field.
class ParseError : public std::runtime_error
{
    public:
        ParseError(const std::string& what, std::size_t line, std::size_t column, std::string path = {})
            : std::runtime_error(what), line_(line), column_(column), path_(std::move(path))
        {
        }
        std::size_t line() const { return line_; }
        std::size_t column() const { return column_; }
        const std::string& path() const { return path_; }

    private:
        std::size_t line_, column_;
        std::string path_;
};

/**
 * Strict reader for configuration documents:
 *
 *     { "dimension": 2,
 *       "points": [["0/1", "0/1"], ["2/1", "2/1"]],
 *       "colors": [[0], [1]] }
 *
 * Coordinates are "p/q" (or "p") strings; colors must partition the point
 * indices. Unknown fields are rejected.
 */
ColoredConfiguration parse_configuration(std::string_view text);

Json to_json(const ColoredConfiguration& config);
Json to_json(const RationalPoint& point);
Json to_json(const TverbergResult& result);
Json to_json(const HomologyProfile& profile);
Json to_json(const ConnectivityEstimate& estimate);
Json to_json(const CriterionReport& report);
/// Timing lives under "elapsed_seconds" only; everything else is reproducible.
Json to_json(const VerificationReport& report);

/// Command name, every parameter, tool version and input digests.
struct RunManifest
{
    std::string command;
    Json parameters = Json::object();
    std::map<std::string, std::string> input_digests;

    Json to_json() const;
};

}  // namespace tverberg

#endif
