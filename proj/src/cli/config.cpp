#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include "rotodec/cli.hpp"

namespace rotodec::cli
{
namespace
{
const std::set<std::string> known_keys{
    "model",  "temp",   "axes",   "eps-rel", "depol",      "radius",
    "dx",     "mass",   "density", "v0",     "a",          "b",
    "expansion", "beta", "euler", "numeric", "degrees",    "degree",
    "format", "output", "var",    "from",    "to",         "n",
    "scale",  "orientations", "pairs", "t-max", "steps", "orders"};

[[noreturn]] void bad(const std::string& key, const std::string& why)
{
    throw UsageError("invalid value for '" + key + "': " + why);
}

double parse_number(const std::string& key, const std::string& text)
{
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    while (end && *end == ' ')
        ++end;
    if (end == begin || *end != '\0' || errno == ERANGE)
        bad(key, "'" + text + "' is not a number");
    if (!std::isfinite(v))
        bad(key, "must be finite");
    return v;
}

double number(const Json& j, const std::string& key)
{
    if (j.is_number())
    {
        const double v = j.get<double>();
        if (!std::isfinite(v))
            bad(key, "must be finite");
        return v;
    }
    if (j.is_string())
        return parse_number(key, j.get<std::string>());
    bad(key, "expected a number");
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, sep))
        parts.push_back(item);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

std::vector<double> number_list(const Json& j, const std::string& key)
{
    std::vector<double> out;
    if (j.is_array())
    {
        for (const auto& e : j)
            out.push_back(number(e, key));
    }
    else if (j.is_string())
    {
        for (const auto& s : split(j.get<std::string>(), ','))
            out.push_back(parse_number(key, s));
    }
    else
    {
        bad(key, "expected a list of numbers");
    }
    return out;
}

std::array<double, 3> triple(const Json& j, const std::string& key)
{
    auto v = number_list(j, key);
    if (v.size() != 3)
        bad(key, "expected three comma-separated numbers");
    return {v[0], v[1], v[2]};
}

bool flag(const Json& merged, const std::string& key)
{
    if (!merged.contains(key))
        return false;
    const Json& j = merged.at(key);
    if (j.is_boolean())
        return j.get<bool>();
    if (j.is_string())
    {
        const auto s = j.get<std::string>();
        if (s == "true" || s == "1")
            return true;
        if (s == "false" || s == "0")
            return false;
    }
    bad(key, "expected true or false");
}

std::string text(const Json& merged, const std::string& key,
                 const std::string& fallback)
{
    if (!merged.contains(key))
        return fallback;
    if (!merged.at(key).is_string())
        bad(key, "expected a string");
    return merged.at(key).get<std::string>();
}

double get(const Json& merged, const std::string& key, double fallback)
{
    return merged.contains(key) ? number(merged.at(key), key) : fallback;
}

void require_positive(const std::string& key, double v)
{
    if (!(v > 0))
        bad(key, "must be positive");
}

int integer(const Json& merged, const std::string& key, int fallback)
{
    if (!merged.contains(key))
        return fallback;
    const double v = number(merged.at(key), key);
    if (v != std::floor(v) || std::fabs(v) > 1e9)
        bad(key, "expected an integer");
    return static_cast<int>(v);
}

double angle_scale(const Json& merged)
{
    return flag(merged, "degrees") ? constants::pi / 180 : 1.0;
}

Json triple_json(const std::array<double, 3>& t)
{
    return Json::array({t[0], t[1], t[2]});
}
} // namespace

//---------------------------------------------------------------------------//

RunConfig resolve_config(const Json& merged, const std::string& model)
{
    if (!merged.is_object())
        throw UsageError("configuration must be a JSON object");
    for (const auto& [key, value] : merged.items())
        if (!known_keys.count(key))
            throw UsageError("unknown configuration key '" + key + "'");

    RunConfig cfg;
    Json& echo = cfg.echo;
    echo["model"] = model;
    if (model == "photon")
        cfg.model = Model::photon;
    else if (model == "gas")
        cfg.model = Model::gas;
    else if (model == "translational")
        cfg.model = Model::translational;
    else
        bad("model", "expected photon, gas or translational");

    cfg.temperature = get(merged, "temp", cfg.temperature);
    require_positive("temp", cfg.temperature);
    echo["temp"] = cfg.temperature;

    const double to_rad = angle_scale(merged);
    if (merged.contains("euler") && merged.contains("beta"))
        throw UsageError("'beta' and 'euler' are mutually exclusive");
    if (merged.contains("euler"))
    {
        auto e = triple(merged.at("euler"), "euler");
        cfg.orientation = {e[0] * to_rad, e[1] * to_rad, e[2] * to_rad};
    }
    else if (merged.contains("beta"))
    {
        cfg.orientation = {0, number(merged.at("beta"), "beta") * to_rad, 0};
    }
    echo["euler"] = triple_json({cfg.orientation.alpha, cfg.orientation.beta,
                                 cfg.orientation.gamma});
    echo["degrees"] = false;

    switch (cfg.model)
    {
    case Model::photon:
        if (merged.contains("axes"))
            cfg.semi_axes = triple(merged.at("axes"), "axes");
        for (double v : cfg.semi_axes)
            require_positive("axes", v);
        cfg.rel_permittivity
            = get(merged, "eps-rel", cfg.rel_permittivity);
        if (merged.contains("depol"))
        {
            auto L = triple(merged.at("depol"), "depol");
            for (double v : L)
                if (!(v >= 0 && v <= 1))
                    bad("depol", "factors must lie in [0, 1]");
            if (std::fabs(L[0] + L[1] + L[2] - 1) > 1e-6)
                bad("depol", "factors must sum to 1");
            cfg.depolarization = L;
        }
        echo["axes"] = triple_json(cfg.semi_axes);
        echo["eps-rel"] = cfg.rel_permittivity;
        if (cfg.depolarization)
            echo["depol"] = triple_json(*cfg.depolarization);
        break;
    case Model::translational:
        cfg.radius = get(merged, "radius", cfg.radius);
        require_positive("radius", cfg.radius);
        cfg.rel_permittivity
            = get(merged, "eps-rel", cfg.rel_permittivity);
        if (merged.contains("dx"))
        {
            cfg.delta_x = number(merged.at("dx"), "dx");
            if (*cfg.delta_x < 0)
                bad("dx", "must be non-negative");
        }
        echo["radius"] = cfg.radius;
        echo["eps-rel"] = cfg.rel_permittivity;
        if (cfg.delta_x)
            echo["dx"] = *cfg.delta_x;
        break;
    case Model::gas:
        cfg.mass = get(merged, "mass", cfg.mass);
        cfg.density = get(merged, "density", cfg.density);
        cfg.V0 = get(merged, "v0", cfg.V0);
        cfg.a = get(merged, "a", cfg.a);
        cfg.b = get(merged, "b", cfg.b);
        require_positive("mass", cfg.mass);
        require_positive("density", cfg.density);
        require_positive("a", cfg.a);
        require_positive("b", cfg.b);
        {
            const auto e = text(merged, "expansion", "first");
            if (e == "first")
                cfg.expansion = BornExpansion::first_order;
            else if (e == "full")
                cfg.expansion = BornExpansion::full;
            else
                bad("expansion", "expected first or full");
            echo["mass"] = cfg.mass;
            echo["density"] = cfg.density;
            echo["v0"] = cfg.V0;
            echo["a"] = cfg.a;
            echo["b"] = cfg.b;
            echo["expansion"] = e;
        }
        break;
    }
    if (cfg.model != Model::gas && !(cfg.rel_permittivity >= 1))
        bad("eps-rel", "must be at least 1");

    cfg.numeric = flag(merged, "numeric");
    echo["numeric"] = cfg.numeric;
    cfg.grid_degree = integer(merged, "degree", 0);
    if (merged.contains("degree"))
    {
        if (cfg.grid_degree < 2)
            bad("degree", "must be at least 2");
        echo["degree"] = cfg.grid_degree;
    }

    const auto fmt = text(merged, "format", "csv");
    if (fmt == "csv")
        cfg.format = Format::csv;
    else if (fmt == "json")
        cfg.format = Format::json;
    else if (fmt == "table")
        cfg.format = Format::table;
    else
        bad("format", "expected csv, json or table");
    cfg.output = text(merged, "output", "");
    return cfg;
}

SweepRequest resolve_sweep(const Json& merged)
{
    SweepRequest s;
    s.variable = text(merged, "var", "");
    if (s.variable != "temperature" && s.variable != "beta"
        && s.variable != "axis-ratio" && s.variable != "density")
        bad("var", "expected temperature, beta, axis-ratio or density");
    if (!merged.contains("from") || !merged.contains("to"))
        throw UsageError("sweep needs 'from' and 'to'");
    const double scale = s.variable == "beta" ? angle_scale(merged) : 1.0;
    s.lo = number(merged.at("from"), "from") * scale;
    s.hi = number(merged.at("to"), "to") * scale;
    s.count = integer(merged, "n", 11);
    if (s.count < 1)
        bad("n", "sweep range is empty");
    if (s.count > 1 && !(s.hi > s.lo))
        bad("to", "sweep range is empty");
    const auto sc = text(merged, "scale", "linear");
    if (sc == "log")
        s.log_scale = true;
    else if (sc != "linear")
        bad("scale", "expected linear or log");
    if (s.log_scale && !(s.lo > 0))
        bad("from", "log sweeps need a positive range");
    return s;
}

EvolveRequest resolve_evolve(const Json& merged)
{
    EvolveRequest e;
    const double to_rad = angle_scale(merged);
    if (!merged.contains("orientations"))
        throw UsageError("evolve needs 'orientations'");
    const Json& o = merged.at("orientations");
    std::vector<std::array<double, 3>> raw;
    if (o.is_array())
    {
        for (const auto& item : o)
            raw.push_back(triple(item, "orientations"));
    }
    else if (o.is_string())
    {
        for (const auto& item : split(o.get<std::string>(), ';'))
            raw.push_back(triple(Json(item), "orientations"));
    }
    else
    {
        bad("orientations", "expected a list of Euler triples");
    }
    if (raw.size() < 2)
        bad("orientations", "grid needs at least two points");
    for (const auto& t : raw)
        e.orientations.push_back({t[0] * to_rad, t[1] * to_rad, t[2] * to_rad});

    std::vector<std::pair<double, double>> pairs;
    if (!merged.contains("pairs"))
    {
        pairs.emplace_back(0, 1);
    }
    else if (merged.at("pairs").is_array())
    {
        for (const auto& p : merged.at("pairs"))
        {
            auto v = number_list(p, "pairs");
            if (v.size() != 2)
                bad("pairs", "each pair needs two indices");
            pairs.emplace_back(v[0], v[1]);
        }
    }
    else if (merged.at("pairs").is_string())
    {
        for (const auto& item : split(merged.at("pairs").get<std::string>(), ','))
        {
            auto ij = split(item, '-');
            if (ij.size() != 2)
                bad("pairs", "expected i-j");
            pairs.emplace_back(parse_number("pairs", ij[0]),
                               parse_number("pairs", ij[1]));
        }
    }
    else
    {
        bad("pairs", "expected a list of index pairs");
    }
    for (auto [i, j] : pairs)
    {
        const double n = static_cast<double>(e.orientations.size());
        if (i != std::floor(i) || j != std::floor(j) || i < 0 || j < 0
            || i >= n || j >= n || i == j)
            bad("pairs", "indices must be distinct grid indices");
        e.pairs.emplace_back(static_cast<std::size_t>(i),
                             static_cast<std::size_t>(j));
    }

    e.t_max = get(merged, "t-max", 1.0);
    require_positive("t-max", e.t_max);
    e.steps = integer(merged, "steps", 10);
    if (e.steps < 1)
        bad("steps", "must be at least 1");
    return e;
}

int effective_degree(const RunConfig& cfg)
{
    if (cfg.grid_degree > 0)
        return cfg.grid_degree;
    if (const char* env = std::getenv("ROTODEC_GRID_DEGREE"))
    {
        const double v = parse_number("ROTODEC_GRID_DEGREE", env);
        if (v != std::floor(v) || v < 2 || v > 1000)
            bad("ROTODEC_GRID_DEGREE", "expected an integer in [2, 1000]");
        return static_cast<int>(v);
    }
    return cfg.model == Model::gas ? default_born_degree
                                   : default_dipole_degree;
}

} // namespace rotodec::cli
