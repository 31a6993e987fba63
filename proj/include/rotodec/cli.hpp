#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rates.hpp"

namespace rotodec::cli
{
using Json = nlohmann::ordered_json;

//! Invalid flag or parameter value; maps to exit status 2.
class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

enum ExitCode
{
    exit_success = 0,
    exit_usage = 2,
    exit_numeric = 3
};

enum class Model
{
    photon,
    gas,
    translational
};

enum class Format
{
    csv,
    json,
    table
};

//! Fully resolved run parameters (SI units, angles in radians).
struct RunConfig
{
    Model model = Model::photon;
    double temperature = 300;

    // photon / translational
    std::array<double, 3> semi_axes = nanodiamond::semi_axes;
    double rel_permittivity = nanodiamond::relative_permittivity;
    std::optional<std::array<double, 3>> depolarization;
    double radius = nanodiamond::radius;
    std::optional<double> delta_x;

    // gas
    double mass = 6.6335209e-26;
    double density = 2.5e25;
    double V0 = 1e-20;
    double a = 1e24;
    double b = 5e23;
    BornExpansion expansion = BornExpansion::first_order;

    EulerAngles orientation{0, constants::pi / 20, 0};
    bool numeric = false;
    int grid_degree = 0; //!< 0 selects the model default

    Format format = Format::csv;
    std::string output; //!< empty for standard output

    //! Echo of the merged input (flags over file), for reproduction.
    Json echo = Json::object();
};

//! Parsed sweep request.
struct SweepRequest
{
    std::string variable; //!< temperature, beta, axis-ratio, density
    double lo = 0;
    double hi = 0;
    int count = 0;
    bool log_scale = false;
};

struct EvolveRequest
{
    std::vector<EulerAngles> orientations;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    double t_max = 0;
    int steps = 0;
};

using Value = std::variant<double, std::string>;
using Record = std::vector<std::pair<std::string, Value>>;

struct Output
{
    Json config;
    std::vector<Record> records;
};

//! Build a RunConfig from merged key/value input. Keys follow the long flag
//! names (temp, axes, eps-rel, beta, euler, ...). Throws UsageError naming
//! the offending field.
RunConfig resolve_config(const Json& merged, const std::string& model);

SweepRequest resolve_sweep(const Json& merged);
EvolveRequest resolve_evolve(const Json& merged);

//! Effective quadrature degree: config value, else ROTODEC_GRID_DEGREE,
//! else the model default.
int effective_degree(const RunConfig& cfg);

Output cmd_rate(const RunConfig& cfg);
Output cmd_sweep(const RunConfig& cfg, const SweepRequest& sweep);
Output cmd_table1(const RunConfig& cfg);
Output cmd_evolve(const RunConfig& cfg, const EvolveRequest& request);
Output cmd_zeta(const std::vector<int>& orders);

std::string format_number(double v);
std::string to_csv(const Output& out);
std::string to_json(const Output& out);
std::string to_table(const Output& out);

//! Full command-line entry point; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

} // namespace rotodec::cli
