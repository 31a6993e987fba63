#pragma once

#include <array>
#include <vector>

#include "constants.hpp"
#include "environment.hpp"
#include "orientation.hpp"
#include "quadrature.hpp"
#include "scattering.hpp"

namespace rotodec
{
//---------------------------------------------------------------------------//
/*!
 * Partial factors of a rate: lambda = prefactor * thermal_moment *
 * material_factor * angular_factor.
 *
 * Photon models: thermal_moment = ∫ k^6 (N/V)μ dk, material_factor is the
 * largest squared polarizability anisotropy, angular_factor = L / material.
 * Gas models: thermal_moment = ∫ k^7 μ dk, material_factor = (F D)^2,
 * angular_factor the dimensionless double-sphere integral (for numeric
 * paths, the effective value implied by the computed rate).
 */
struct RateBreakdown
{
    double prefactor = 0;
    double thermal_moment = 0;
    double material_factor = 0;
    double angular_factor = 0;

    double product() const
    {
        return prefactor * thermal_moment * material_factor * angular_factor;
    }
};

struct RotationalRate
{
    double lambda = 0; //!< 1/s
    RateBreakdown breakdown;

    //! 1/lambda in s (infinite for a vanishing rate).
    double coherence_time() const;
};

struct TranslationalRate
{
    double rate = 0; //!< 1/s
    double coherence_time() const;
};

//! Coefficients of the general photon angular factor,
//! L = A²a1 + B²a2 + C²a3 + AB a4 + AC a5 - BC a6.
struct AngularCoefficients
{
    double A, B, C;             //!< C m^2 / V
    double a1, a2, a3, a4, a5, a6;
};

AngularCoefficients angular_coefficients(std::array<double, 3> alpha_diag,
                                         const EulerAngles& omega);

//! L for body-frame polarizabilities alpha_diag and relative orientation
//! omega, in (C m^2 / V)^2. Evaluated in long double; the relative error
//! grows like 1e-19 / θ² for rotations by a small angle θ. Rounding residue
//! below zero is clamped; a clearly negative result throws NumericError.
double photon_L_factor(std::array<double, 3> alpha_diag,
                       const EulerAngles& omega);

//! Λ = 6! c / (36 ε0²) (k_B T / hbar c)^7 ζ(7) L. Throws DomainError unless
//! alpha is diagonal (body frame).
RotationalRate photon_rate_closed(const PolarizabilityTensor& alpha,
                                  const EulerAngles& omega,
                                  const ThermalPhotonBath& bath);

//! Cylindrically symmetric body (αx = αy):
//! Λ = 6! 2c / (9 ε0²) (k_B T / hbar c)^7 ζ(7) (αx - αz)² sin²β.
RotationalRate photon_rate_symmetric(double alpha_x, double alpha_z,
                                     double beta,
                                     const ThermalPhotonBath& bath);

/*!
 * Rate from direct quadrature of the dipole amplitude difference,
 * Λ = (c/2) ∫ dk k² (N/V)μ(k) ∬ d²k̂ d²k̂' <|f - f_ω|²>_pol, with
 * Δα = α - Rᵀ(ω) α R(ω) and the polarization average of
 * polarization_reduced_difference.
 *
 * The dipole amplitude is homogeneous of degree two in k, so the double
 * sphere integral is evaluated once at k_th and the radial integral
 * ∫ k^6 (N/V)μ dk is done by adaptive quadrature.
 */
RotationalRate photon_rate_numeric(const PolarizabilityTensor& alpha,
                                   const EulerAngles& omega,
                                   const ThermalPhotonBath& bath,
                                   const SphereGrid& grid);

//! Numeric photon rate between two absolute orientations of a body whose
//! body-frame tensor is alpha, from lab-frame tensors R α Rᵀ.
RotationalRate photon_rate_numeric_between(const PolarizabilityTensor& alpha,
                                           const EulerAngles& a,
                                           const EulerAngles& b,
                                           const ThermalPhotonBath& bath,
                                           const SphereGrid& grid);

//! Λ = (32π / 15 hbar^8) (N/V) sqrt(2π m^7 (k_B T)^5)
//!     (a - b)² V0² / (a^4 b^3) sin²β.
RotationalRate gas_rate_closed(const GaussianPotential& pot,
                               const GasEnvironment& env, double beta);

enum class BornExpansion
{
    first_order, //!< long-wavelength amplitude difference (closed-form limit)
    full         //!< exact Gaussian Born amplitudes
};

/*!
 * Λ = (N/2V) ∫ dk k² μ(k) (hbar k / m) ∬ |f_0 - f_β|² by nested quadrature:
 * adaptive radial integration whose integrand is a double-sphere sum of
 * Born amplitude differences at Δk = k (k̂' - k̂).
 *
 * The full mode exceeds the closed form outside the long-wavelength regime;
 * the closed form is its small-k limit.
 */
RotationalRate gas_rate_numeric(const GaussianPotential& pot,
                                const GasEnvironment& env, double beta,
                                const SphereGrid& grid,
                                BornExpansion expansion
                                = BornExpansion::first_order);

//! 𝓛 = 8! / (2π³) V² c ((ε_r - 1)/(ε_r + 2))² (k_B T / hbar c)^9 ζ(9) Δx²
//! for a sphere of the given radius.
TranslationalRate translational_rate(double radius, double rel_permittivity,
                                     const ThermalPhotonBath& bath,
                                     double delta_x);

//---------------------------------------------------------------------------//
// Reference nano-diamond and coherence-time table
//---------------------------------------------------------------------------//

namespace nanodiamond
{
inline constexpr std::array<double, 3> semi_axes{50e-9, 50e-9, 75e-9};
inline constexpr double relative_permittivity = 6.0;
inline constexpr double radius = 50e-9;
inline constexpr std::array<double, 5> temperatures{3, 50, 100, 200, 300};
//! Decade exponents of the tabulated rotational / translational times.
inline constexpr std::array<int, 5> rotational_decades{11, 3, 1, -1, -3};
inline constexpr std::array<int, 5> translational_decades{20, 9, 6, 3, 2};

EllipsoidGeometry geometry();
PolarizabilityTensor polarizability();
} // namespace nanodiamond

struct Table1Row
{
    double temperature;       //!< K
    double rotational_time;   //!< 1/Λ, s
    double translational_time; //!< 1/𝓛, s
};

//! Coherence times of the reference nano-diamond at the tabulated
//! temperatures; Δx = r sinβ for the translational rate.
std::vector<Table1Row> table1(double beta = constants::pi / 20);

} // namespace rotodec
