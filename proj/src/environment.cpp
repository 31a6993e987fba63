#include "rotodec/environment.hpp"

#include <cmath>

#include "rotodec/constants.hpp"

namespace rotodec
{
namespace
{
void require_positive(double v, const char* what)
{
    if (!(v > 0) || !std::isfinite(v))
        throw DomainError(std::string(what) + " must be positive and finite");
}
} // namespace

ThermalPhotonBath::ThermalPhotonBath(double temperature)
    : temperature_(temperature)
{
    require_positive(temperature, "temperature");
}

GasEnvironment::GasEnvironment(double temperature, double particle_mass,
                               double number_density)
    : temperature_(temperature),
      particle_mass_(particle_mass),
      number_density_(number_density)
{
    require_positive(temperature, "temperature");
    require_positive(particle_mass, "particle mass");
    require_positive(number_density, "number density");
}

double GasEnvironment::thermal_lambda() const
{
    using namespace constants;
    return hbar * hbar / (2 * particle_mass_ * k_B * temperature_);
}

//---------------------------------------------------------------------------//

double zeta_integral(int n)
{
    if (n < 2)
        throw DomainError("zeta integral diverges for n < 2");
    RadialOptions opts;
    opts.relative_tolerance = 1e-13;
    // the integrand peaks at χ ≈ n - 1; keep the cutoff far in the tail
    opts.x_max = 80.0 + 2.0 * n;
    const int p = n - 1;
    // unit-scale Planck weight carries the factor 2 of the photon weight
    double integral = radial_integrate(
        [p](double x) { return std::pow(x, p); }, RadialWeight::planck(1.0),
        opts);
    return 0.5 * integral / std::tgamma(static_cast<double>(n));
}

double planck_weight(double k, const ThermalPhotonBath& bath)
{
    if (!(k > 0))
        throw DomainError("photon wavenumber must be positive");
    return radial_weight(bath)(k);
}

double maxwell_boltzmann_mu(double k, const GasEnvironment& env)
{
    if (!(k >= 0))
        throw DomainError("wavenumber must be non-negative");
    return radial_weight(env)(k);
}

RadialWeight radial_weight(const ThermalPhotonBath& bath)
{
    return RadialWeight::planck(thermal_photon_wavenumber(bath.temperature()));
}

RadialWeight radial_weight(const GasEnvironment& env)
{
    const double lambda = env.thermal_lambda();
    return RadialWeight::gaussian(1 / std::sqrt(lambda),
                                  std::pow(lambda / constants::pi, 1.5));
}

//---------------------------------------------------------------------------//

namespace
{
struct MomentQuadrature
{
    int power;

    double operator()(const ThermalPhotonBath& bath) const
    {
        if (power < 1)
            throw DomainError("photon moment diverges for power < 1");
        RadialOptions opts;
        opts.x_max = 80.0 + 2.0 * power;
        return radial_integrate(
            [p = power](double k) { return std::pow(k, p); },
            radial_weight(bath), opts);
    }

    double operator()(const GasEnvironment& env) const
    {
        if (power < 0)
            throw DomainError("gas moment requires power >= 0");
        RadialOptions opts;
        opts.x_max = 9.0 + std::sqrt(static_cast<double>(power));
        return radial_integrate(
            [p = power](double k) { return std::pow(k, p); },
            radial_weight(env), opts);
    }
};

struct MomentClosed
{
    int power;

    double operator()(const ThermalPhotonBath& bath) const
    {
        if (power < 1)
            throw DomainError("photon moment diverges for power < 1");
        const double kth = thermal_photon_wavenumber(bath.temperature());
        return 2 * std::tgamma(power + 1.0) * zeta_integral(power + 1)
               * std::pow(kth, power + 1);
    }

    double operator()(const GasEnvironment& env) const
    {
        if (power < 0)
            throw DomainError("gas moment requires power >= 0");
        const double lambda = env.thermal_lambda();
        const double h = 0.5 * (power + 1);
        return std::tgamma(h) / (2 * std::pow(lambda, h))
               * std::pow(lambda / constants::pi, 1.5);
    }
};
} // namespace

double radial_thermal_moment(int power, const Environment& env)
{
    return std::visit(MomentQuadrature{power}, env);
}

double radial_thermal_moment_closed(int power, const Environment& env)
{
    return std::visit(MomentClosed{power}, env);
}

} // namespace rotodec
