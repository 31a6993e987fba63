#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "rotodec/cli.hpp"
#include "rotodec/errors.hpp"
#include "rotodec/evolution.hpp"

namespace rotodec::cli
{
namespace
{
PolarizabilityTensor body_polarizability(const RunConfig& cfg)
{
    EllipsoidGeometry geom(cfg.semi_axes, cfg.rel_permittivity);
    if (cfg.depolarization)
        return polarizability_from_depolarization(geom, *cfg.depolarization);
    return polarizability_from_geometry(geom);
}

void add_breakdown(Record& r, const RateBreakdown& b)
{
    r.emplace_back("prefactor", b.prefactor);
    r.emplace_back("thermal_moment", b.thermal_moment);
    r.emplace_back("material_factor", b.material_factor);
    r.emplace_back("angular_factor", b.angular_factor);
}

void add_numeric(Record& r, double closed, double numeric, int degree)
{
    r.emplace_back("lambda_numeric", numeric);
    r.emplace_back("relative_difference",
                   closed != 0 ? numeric / closed - 1 : numeric);
    r.emplace_back("grid_degree", static_cast<double>(degree));
}

//! Rate columns shared by rate and sweep.
Record evaluate(const RunConfig& cfg)
{
    Record r;
    switch (cfg.model)
    {
    case Model::photon:
    {
        const ThermalPhotonBath bath(cfg.temperature);
        const auto alpha = body_polarizability(cfg);
        const auto closed = photon_rate_closed(alpha, cfg.orientation, bath);
        r.emplace_back("lambda", closed.lambda);
        r.emplace_back("coherence_time", closed.coherence_time());
        add_breakdown(r, closed.breakdown);
        if (cfg.numeric)
        {
            const int degree = effective_degree(cfg);
            const auto num = photon_rate_numeric(
                alpha, cfg.orientation, bath, build_sphere_grid(degree));
            add_numeric(r, closed.lambda, num.lambda, degree);
        }
        break;
    }
    case Model::gas:
    {
        const GasEnvironment env(cfg.temperature, cfg.mass, cfg.density);
        const GaussianPotential pot(cfg.V0, cfg.a, cfg.b);
        const double beta = cfg.orientation.beta;
        const auto closed = gas_rate_closed(pot, env, beta);
        r.emplace_back("lambda", closed.lambda);
        r.emplace_back("coherence_time", closed.coherence_time());
        add_breakdown(r, closed.breakdown);
        // (2 k_th)² / (4 min(a, b)) with k_th = 1/sqrt(λ_th)
        r.emplace_back("long_wavelength_parameter",
                       1 / (env.thermal_lambda() * std::min(cfg.a, cfg.b)));
        if (cfg.numeric)
        {
            const int degree = effective_degree(cfg);
            const auto num = gas_rate_numeric(
                pot, env, beta, build_sphere_grid(degree), cfg.expansion);
            add_numeric(r, closed.lambda, num.lambda, degree);
        }
        break;
    }
    case Model::translational:
    {
        const ThermalPhotonBath bath(cfg.temperature);
        const double dx = cfg.delta_x
                              ? *cfg.delta_x
                              : cfg.radius
                                    * std::fabs(std::sin(cfg.orientation.beta));
        const auto t
            = translational_rate(cfg.radius, cfg.rel_permittivity, bath, dx);
        r.emplace_back("rate", t.rate);
        r.emplace_back("coherence_time", t.coherence_time());
        r.emplace_back("delta_x", dx);
        break;
    }
    }
    return r;
}

const char* model_name(Model m)
{
    switch (m)
    {
    case Model::photon:
        return "photon";
    case Model::gas:
        return "gas";
    case Model::translational:
        return "translational";
    }
    return "";
}

std::string decade_label(int d)
{
    return "1e" + std::to_string(d);
}

bool within_decade(double t, int d)
{
    return std::fabs(std::log10(t) - d) <= 1;
}
} // namespace

//---------------------------------------------------------------------------//

Output cmd_rate(const RunConfig& cfg)
{
    Output out;
    out.config = cfg.echo;
    Record r;
    r.emplace_back("model", std::string(model_name(cfg.model)));
    r.emplace_back("temperature", cfg.temperature);
    r.emplace_back("euler_alpha", cfg.orientation.alpha);
    r.emplace_back("beta", cfg.orientation.beta);
    r.emplace_back("euler_gamma", cfg.orientation.gamma);
    for (auto& col : evaluate(cfg))
        r.push_back(std::move(col));
    out.records.push_back(std::move(r));
    return out;
}

Output cmd_sweep(const RunConfig& cfg, const SweepRequest& sweep)
{
    const auto& var = sweep.variable;
    if (var == "density" && cfg.model != Model::gas)
        throw UsageError("invalid value for 'var': density sweeps need the "
                         "gas model");
    if (var == "axis-ratio" && cfg.model == Model::translational)
        throw UsageError("invalid value for 'var': axis-ratio sweeps need "
                         "the photon or gas model");
    if (var == "axis-ratio" && cfg.depolarization)
        throw UsageError("invalid value for 'var': axis-ratio sweeps compute "
                         "depolarization factors; drop 'depol'");

    Output out;
    out.config = cfg.echo;
    out.config["var"] = var;
    out.config["from"] = sweep.lo;
    out.config["to"] = sweep.hi;
    out.config["n"] = sweep.count;
    out.config["scale"] = sweep.log_scale ? "log" : "linear";

    for (int i = 0; i < sweep.count; ++i)
    {
        double x = sweep.lo;
        if (sweep.count > 1)
        {
            const double f = static_cast<double>(i) / (sweep.count - 1);
            x = sweep.log_scale
                    ? sweep.lo * std::pow(sweep.hi / sweep.lo, f)
                    : sweep.lo + (sweep.hi - sweep.lo) * f;
            if (i == sweep.count - 1)
                x = sweep.hi;
        }

        RunConfig point = cfg;
        if (var == "temperature")
            point.temperature = x;
        else if (var == "beta")
            point.orientation.beta = x;
        else if (var == "density")
            point.density = x;
        else if (cfg.model == Model::photon)
            point.semi_axes[2] = x * cfg.semi_axes[0];
        else
            point.b = x * cfg.a;

        Record r;
        r.emplace_back(var, x);
        for (auto& col : evaluate(point))
            r.push_back(std::move(col));
        out.records.push_back(std::move(r));
    }
    return out;
}

Output cmd_table1(const RunConfig& cfg)
{
    Output out;
    out.config = Json::object();
    out.config["beta"] = cfg.orientation.beta;

    const auto rows = table1(cfg.orientation.beta);
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        const auto& row = rows[i];
        const int rd = nanodiamond::rotational_decades[i];
        const int td = nanodiamond::translational_decades[i];
        const bool ok = within_decade(row.rotational_time, rd)
                        && within_decade(row.translational_time, td)
                        && row.rotational_time < row.translational_time;
        Record r;
        r.emplace_back("temperature", row.temperature);
        r.emplace_back("rotational_time", row.rotational_time);
        r.emplace_back("rotational_reference", decade_label(rd));
        r.emplace_back("translational_time", row.translational_time);
        r.emplace_back("translational_reference", decade_label(td));
        r.emplace_back("status", std::string(ok ? "pass" : "FAIL"));
        out.records.push_back(std::move(r));
    }
    return out;
}

Output cmd_evolve(const RunConfig& cfg, const EvolveRequest& req)
{
    if (cfg.model != Model::photon)
        throw UsageError("invalid value for 'model': evolve supports the "
                         "photon model");
    const OrientationGrid grid = OrientationGrid::full(req.orientations);
    const auto rate = photon_rate_function(
        grid, body_polarizability(cfg), ThermalPhotonBath(cfg.temperature));
    const Eigen::VectorXcd amps
        = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(grid.size()));
    const auto rho0 = OrientationDensityMatrix::pure(grid, amps);

    Output out;
    out.config = cfg.echo;
    Json o = Json::array();
    for (const auto& e : req.orientations)
        o.push_back(Json::array({e.alpha, e.beta, e.gamma}));
    out.config["orientations"] = o;
    Json p = Json::array();
    for (auto [i, j] : req.pairs)
        p.push_back(Json::array({i, j}));
    out.config["pairs"] = p;
    out.config["t-max"] = req.t_max;
    out.config["steps"] = req.steps;

    for (int k = 0; k <= req.steps; ++k)
    {
        const double t = k == req.steps
                             ? req.t_max
                             : req.t_max * k / req.steps;
        const auto rho = evolve(rho0, rate, t);
        Record r;
        r.emplace_back("t", t);
        for (auto [i, j] : req.pairs)
            r.emplace_back("visibility_" + std::to_string(i) + "_"
                               + std::to_string(j),
                           coherence_visibility(rho, i, j));
        r.emplace_back("purity", purity(rho));
        out.records.push_back(std::move(r));
    }
    return out;
}

Output cmd_zeta(const std::vector<int>& orders)
{
    Output out;
    out.config = Json::object();
    out.config["orders"] = orders;
    for (int n : orders)
    {
        Record r;
        r.emplace_back("n", static_cast<double>(n));
        r.emplace_back("zeta", zeta_integral(n));
        out.records.push_back(std::move(r));
    }
    return out;
}

//---------------------------------------------------------------------------//
// Command line
//---------------------------------------------------------------------------//

namespace
{
struct Bound
{
    std::string key;
    CLI::Option* option;
};

struct Subcommand
{
    CLI::App* app = nullptr;
    std::map<std::string, std::string> values;
    std::vector<Bound> bound;
    std::string config_path;
    bool numeric = false;
    bool degrees = false;
    CLI::Option* numeric_opt = nullptr;
    CLI::Option* degrees_opt = nullptr;
    std::string model;

    void add(const std::string& key, const std::string& names,
             const std::string& help)
    {
        bound.push_back({key, app->add_option(names, values[key], help)});
    }

    Json merged() const
    {
        Json j = Json::object();
        if (!config_path.empty())
        {
            std::ifstream in(config_path);
            if (!in)
                throw UsageError("cannot read config file '" + config_path
                                 + "'");
            try
            {
                j = Json::parse(in);
            }
            catch (const Json::exception& e)
            {
                throw UsageError("config file '" + config_path
                                 + "' is not valid JSON: " + e.what());
            }
            if (!j.is_object())
                throw UsageError("config file must hold a JSON object");
        }
        for (const auto& b : bound)
            if (b.option->count() > 0)
                j[b.key] = values.at(b.key);
        if (numeric_opt && numeric_opt->count() > 0)
            j["numeric"] = true;
        if (degrees_opt && degrees_opt->count() > 0)
            j["degrees"] = true;
        return j;
    }

    std::string model_from(const Json& j) const
    {
        if (!model.empty())
            return model;
        if (j.contains("model") && j.at("model").is_string())
            return j.at("model").get<std::string>();
        throw UsageError("missing model (photon, gas or translational)");
    }
};

void add_common(Subcommand& s)
{
    s.app->add_option("--config", s.config_path,
                      "JSON file with parameters (flags override it)");
    s.add("format", "--format", "csv, json or table");
    s.add("output", "-o,--output", "output file (default: standard output)");
    s.degrees_opt = s.app->add_flag("--degrees", s.degrees,
                                    "angles are given in degrees");
}

void add_physics(Subcommand& s)
{
    s.add("temp", "--temp", "temperature in K");
    s.add("beta", "--beta", "rotation angle about y (Euler beta)");
    s.add("euler", "--euler", "z-y-z Euler angles alpha,beta,gamma");
    s.add("axes", "--axes", "ellipsoid semi-axes in m (x,y,z)");
    s.add("eps-rel", "--eps-rel", "relative permittivity");
    s.add("depol", "--depol", "pinned depolarization factors Lx,Ly,Lz");
    s.add("radius", "--radius", "sphere radius in m (translational)");
    s.add("dx", "--dx", "separation in m (translational)");
    s.add("mass", "--mass", "gas particle mass in kg");
    s.add("density", "--density", "gas number density in 1/m^3");
    s.add("v0", "--v0,--V0", "Gaussian potential strength in J");
    s.add("a", "--a", "Gaussian width parameter a in 1/m^2");
    s.add("b", "--b", "Gaussian width parameter b in 1/m^2");
    s.add("expansion", "--expansion", "gas Born amplitudes: first or full");
    s.add("degree", "--degree", "sphere quadrature degree");
    s.numeric_opt = s.app->add_flag("--numeric", s.numeric,
                                    "also evaluate by quadrature");
}

std::vector<int> zeta_orders(const Json& j)
{
    std::vector<int> orders;
    if (!j.contains("orders"))
        return {2, 3, 4, 5, 6, 7, 8, 9};
    std::string text = j.at("orders").is_string()
                           ? j.at("orders").get<std::string>()
                           : std::string();
    if (j.at("orders").is_array())
    {
        for (const auto& e : j.at("orders"))
        {
            if (!e.is_number_integer())
                throw UsageError("invalid value for 'orders': expected "
                                 "integers");
            orders.push_back(e.get<int>());
        }
        return orders;
    }
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        std::size_t used = 0;
        int n = 0;
        try
        {
            n = std::stoi(item, &used);
        }
        catch (const std::exception&)
        {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw UsageError("invalid value for 'orders': '" + item
                             + "' is not an integer");
        orders.push_back(n);
    }
    if (orders.empty())
        throw UsageError("invalid value for 'orders': empty list");
    return orders;
}

void emit(const Output& result, Format format, const std::string& path,
          std::ostream& out)
{
    std::string text;
    switch (format)
    {
    case Format::csv:
        text = to_csv(result);
        break;
    case Format::json:
        text = to_json(result);
        break;
    case Format::table:
        text = to_table(result);
        break;
    }
    if (path.empty())
    {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text))
        throw UsageError("cannot write output file '" + path + "'");
}
} // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err)
{
    CLI::App app("Rotational decoherence rates of anisotropic particles",
                 "rotodec");
    app.require_subcommand(1);

    Subcommand rate, sweep, tab, evo, zeta;

    rate.app = app.add_subcommand("rate", "single-point decoherence rate");
    rate.app->add_option("model", rate.model, "photon, gas or translational");
    add_physics(rate);
    add_common(rate);

    sweep.app = app.add_subcommand("sweep", "rate over a parameter range");
    sweep.app->add_option("model", sweep.model,
                          "photon, gas or translational");
    add_physics(sweep);
    add_common(sweep);
    sweep.add("var", "--var", "temperature, beta, axis-ratio or density");
    sweep.add("from", "--from", "first value");
    sweep.add("to", "--to", "last value");
    sweep.add("n", "--n", "number of points");
    sweep.add("scale", "--scale", "linear or log");

    tab.app = app.add_subcommand("table1",
                                 "coherence times of the reference particle");
    tab.add("beta", "--beta", "rotation angle (default pi/20)");
    add_common(tab);

    evo.app = app.add_subcommand("evolve", "orientation density matrix decay");
    add_physics(evo);
    add_common(evo);
    evo.add("orientations", "--orientations",
            "grid as a,b,g;a,b,g;... Euler triples");
    evo.add("pairs", "--pairs", "visibility pairs as i-j,k-l");
    evo.add("t-max", "--t-max", "final time in s");
    evo.add("steps", "--steps", "number of time steps");

    zeta.app = app.add_subcommand("zeta", "Riemann zeta from the Bose integral");
    zeta.add("orders", "--orders", "comma-separated integers >= 2");
    add_common(zeta);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_success : exit_usage;
    }

    try
    {
        if (rate.app->parsed())
        {
            const Json j = rate.merged();
            const RunConfig cfg = resolve_config(j, rate.model_from(j));
            emit(cmd_rate(cfg), cfg.format, cfg.output, out);
        }
        else if (sweep.app->parsed())
        {
            const Json j = sweep.merged();
            const RunConfig cfg = resolve_config(j, sweep.model_from(j));
            emit(cmd_sweep(cfg, resolve_sweep(j)), cfg.format, cfg.output,
                 out);
        }
        else if (tab.app->parsed())
        {
            Json j = tab.merged();
            if (!j.contains("format"))
                j["format"] = "table";
            if (!j.contains("beta") && !j.contains("euler"))
                j["beta"] = constants::pi / 20 * (j.value("degrees", false)
                                                       ? 180 / constants::pi
                                                       : 1.0);
            const RunConfig cfg = resolve_config(j, "photon");
            emit(cmd_table1(cfg), cfg.format, cfg.output, out);
        }
        else if (evo.app->parsed())
        {
            Json j = evo.merged();
            const std::string model = evo.model_from(
                j.contains("model") ? j : Json{{"model", "photon"}});
            const RunConfig cfg = resolve_config(j, model);
            emit(cmd_evolve(cfg, resolve_evolve(j)), cfg.format, cfg.output,
                 out);
        }
        else if (zeta.app->parsed())
        {
            Json j = zeta.merged();
            const auto orders = zeta_orders(j);
            j.erase("orders");
            const RunConfig cfg = resolve_config(j, "photon");
            emit(cmd_zeta(orders), cfg.format, cfg.output, out);
        }
    }
    catch (const UsageError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const DomainError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const NumericError& e)
    {
        err << "numerical failure: " << e.what() << " (achieved error "
            << e.achieved_error() << ")\n";
        return exit_numeric;
    }
    catch (const ContractError& e)
    {
        err << "internal error: " << e.what() << '\n';
        return exit_numeric;
    }
    return exit_success;
}

} // namespace rotodec::cli
