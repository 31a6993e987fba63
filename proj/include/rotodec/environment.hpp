#pragma once

#include <variant>

#include "quadrature.hpp"

namespace rotodec
{
//! Black-body photon gas at temperature T_E (K).
class ThermalPhotonBath
{
  public:
    explicit ThermalPhotonBath(double temperature);
    double temperature() const { return temperature_; }

  private:
    double temperature_;
};

//! Ideal Maxwell-Boltzmann gas of scatterers.
class GasEnvironment
{
  public:
    //! temperature in K, particle_mass in kg, number_density in 1/m^3.
    GasEnvironment(double temperature, double particle_mass,
                   double number_density);

    double temperature() const { return temperature_; }
    double particle_mass() const { return particle_mass_; }
    double number_density() const { return number_density_; }

    //! lambda = hbar^2 / (2 m k_B T), in m^2.
    double thermal_lambda() const;

  private:
    double temperature_;
    double particle_mass_;
    double number_density_;
};

using Environment = std::variant<ThermalPhotonBath, GasEnvironment>;

//! ζ(n) = 1/(n-1)! ∫_0^∞ χ^(n-1) / (e^χ - 1) dχ by quadrature,
//! absolute error below 1e-8. Throws DomainError for n < 2.
double zeta_integral(int n);

//! (N/V) μ(k) = 2 / (exp(hbar c k / k_B T) - 1) for the photon gas.
//! Throws DomainError for k <= 0.
double planck_weight(double k, const ThermalPhotonBath& bath);

//! μ(k) = (hbar^2 / 2π m k_B T)^(3/2) exp(-hbar^2 k^2 / 2 m k_B T), in m^3;
//! normalized so ∫ d^3k μ = 1. Throws DomainError for k < 0.
double maxwell_boltzmann_mu(double k, const GasEnvironment& env);

//! Radial weight matching planck_weight / maxwell_boltzmann_mu.
RadialWeight radial_weight(const ThermalPhotonBath& bath);
RadialWeight radial_weight(const GasEnvironment& env);

//! ∫_0^∞ k^power w(k) dk by adaptive quadrature, with w = planck_weight
//! for photons and maxwell_boltzmann_mu for a gas. Units are
//! m^-(power+1) and m^(2-power) respectively.
//!
//! Throws DomainError when the integral diverges (power < 1 for photons,
//! power < 0 for a gas).
double radial_thermal_moment(int power, const Environment& env);

//! Closed forms of the same moments: 2 p! ζ(p+1) k_th^(p+1) with ζ from
//! zeta_integral, and the Gaussian moment Γ((p+1)/2) / (2 λ^((p+1)/2))
//! (λ/π)^(3/2).
double radial_thermal_moment_closed(int power, const Environment& env);

} // namespace rotodec
