#include "tverberg/io.hpp"

#include <set>

namespace tverberg {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            column = 1;
        }
        else
            ++column;
    }
    return {line, column};
}

[[noreturn]] void structural(const std::string& path, const std::string& what)
{
    throw ParseError(path + ": " + what, 0, 0, path);
}

std::size_t as_index(const Json& v, const std::string& path)
{
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        structural(path, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

}  // namespace

ColoredConfiguration parse_configuration(std::string_view text)
{
    Json doc;
    try
    {
        doc = Json::parse(text.begin(), text.end());
    }
    catch (const nlohmann::json::parse_error& e)
    {
        // nlohmann reports the 1-based byte just past the failure.
        const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column),
                         line, column);
    }
    if (!doc.is_object())
        structural("$", "expected an object");
    static const std::set<std::string> known{"dimension", "points", "colors"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key))
            structural("$." + key, "unknown field");
    for (const auto& key : known)
        if (!doc.contains(key))
            structural("$." + key, "missing field");

    ColoredConfiguration config;
    const auto& dim = doc["dimension"];
    if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1 || dim.get<std::int64_t>() > 64)
        structural("$.dimension", "expected an integer in [1, 64]");
    config.d = dim.get<int>();

    const auto& points = doc["points"];
    if (!points.is_array())
        structural("$.points", "expected an array");
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        const std::string path = "$.points[" + std::to_string(i) + "]";
        if (!points[i].is_array() || points[i].size() != static_cast<std::size_t>(config.d))
            structural(path, "expected an array of " + std::to_string(config.d) + " rational strings");
        RationalPoint p;
        for (std::size_t c = 0; c < points[i].size(); ++c)
        {
            const std::string cpath = path + "[" + std::to_string(c) + "]";
            if (!points[i][c].is_string())
                structural(cpath, "expected a \"p/q\" string");
            try
            {
                p.coords.push_back(parse_rational(points[i][c].get<std::string>()));
            }
            catch (const std::invalid_argument& e)
            {
                structural(cpath, e.what());
            }
        }
        config.points.push_back(std::move(p));
    }

    const auto& colors = doc["colors"];
    if (!colors.is_array())
        structural("$.colors", "expected an array");
    for (std::size_t i = 0; i < colors.size(); ++i)
    {
        const std::string path = "$.colors[" + std::to_string(i) + "]";
        if (!colors[i].is_array())
            structural(path, "expected an array of point indices");
        std::vector<std::size_t> cls;
        for (std::size_t k = 0; k < colors[i].size(); ++k)
        {
            const std::string kpath = path + "[" + std::to_string(k) + "]";
            cls.push_back(as_index(colors[i][k], kpath));
            if (cls.back() >= config.points.size())
                structural(kpath, "point index out of range");
        }
        config.color_classes.push_back(std::move(cls));
    }
    try
    {
        config.validate();
    }
    catch (const std::invalid_argument& e)
    {
        structural("$.colors", e.what());
    }
    return config;
}

Json to_json(const RationalPoint& point)
{
    Json out = Json::array();
    for (const auto& c : point.coords)
        out.push_back(to_string(c));
    return out;
}

Json to_json(const ColoredConfiguration& config)
{
    Json points = Json::array();
    for (const auto& p : config.points)
        points.push_back(to_json(p));
    return Json{{"dimension", config.d}, {"points", points}, {"colors", config.color_classes}};
}

Json to_json(const TverbergResult& result)
{
    Json faces = Json::array();
    for (std::size_t j = 0; j < result.partition.faces.size(); ++j)
    {
        const auto& f = result.partition.faces[j];
        Json coeffs = Json::object();
        for (std::size_t v = 0; v < f.vertices.size(); ++v)
            coeffs[std::to_string(f.vertices[v])] = to_string(result.witness.coefficients[j][v]);
        faces.push_back(Json{{"vertices", f.vertices}, {"colors", f.colors}, {"coefficients", coeffs}});
    }
    return Json{{"faces", faces}, {"common_point", to_json(result.witness.common_point)}};
}

Json to_json(const HomologyProfile& profile)
{
    Json torsion = Json::array();
    for (const auto& degree : profile.torsion)
    {
        Json factors = Json::array();
        for (const auto& t : degree)
            factors.push_back(t.str());
        torsion.push_back(factors);
    }
    Json out{{"coefficients", profile.coefficients.name()}, {"reduced_betti", profile.reduced_betti}};
    if (profile.coefficients.kind() == Coefficients::Kind::Integers)
        out["torsion"] = torsion;
    return out;
}

Json to_json(const ConnectivityEstimate& estimate)
{
    Json tried = Json::array();
    for (const auto& c : estimate.coefficients_tried)
        tried.push_back(c.name());
    Json out;
    out["hconn"] = estimate.hconn ? Json(*estimate.hconn) : Json("all-vanishing");
    out["witness_degree"] = estimate.witness_degree ? Json(*estimate.witness_degree) : Json(nullptr);
    out["coefficients_tried"] = tried;
    return out;
}

Json to_json(const CriterionReport& report)
{
    Json out;
    out["applicable"] = report.applicable;
    out["prime_power"] = report.decomposition
                             ? Json{{"p", report.decomposition->prime}, {"n", report.decomposition->exponent}}
                             : Json(nullptr);
    out["conn_per_factor"] = report.conn_per_factor;
    out["join_conn_lower"] = report.join_conn_lower;
    out["required_conn"] = report.required_conn;
    out["sphere_index"] = report.sphere_index;
    out["guaranteed"] = report.guaranteed;
    out["theorem_tag"] = tag_name(report.tag);
    out["x_vector"] = report.x_vector ? Json(*report.x_vector) : Json(nullptr);
    return out;
}

Json to_json(const VerificationReport& report)
{
    Json failures = Json::array();
    for (const auto& f : report.failures)
        failures.push_back(Json{{"seed", f.seed},
                                {"digest", f.digest},
                                {"status", status_name(f.status)},
                                {"configuration", to_json(f.configuration)}});
    Json out;
    out["theorem_tag"] = report.theorem_tag;
    out["d"] = report.d;
    out["r"] = report.r;
    out["cards"] = report.cards;
    out["seed_base"] = report.seed_base;
    out["instances"] = report.instances;
    out["found"] = report.found;
    out["timeouts"] = report.timeouts;
    out["failures"] = failures;
    out["elapsed_seconds"] = report.elapsed.count();
    return out;
}

Json RunManifest::to_json() const
{
    Json digests = Json::object();
    for (const auto& [name, digest] : input_digests)
        digests[name] = digest;
    return Json{{"command", command}, {"parameters", parameters}, {"tool_version", kToolVersion}, {"input_digests", digests}};
}

}  // namespace tverberg
