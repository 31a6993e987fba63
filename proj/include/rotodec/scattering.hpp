#pragma once

#include <array>

#include "orientation.hpp"
#include "tensor.hpp"

namespace rotodec
{
//---------------------------------------------------------------------------//
// Types
//---------------------------------------------------------------------------//

//! Dielectric ellipsoid; semi-axes in m along the body x, y, z axes.
class EllipsoidGeometry
{
  public:
    EllipsoidGeometry(std::array<double, 3> semi_axes,
                      double relative_permittivity);

    const std::array<double, 3>& semi_axes() const { return semi_axes_; }
    double relative_permittivity() const { return relative_permittivity_; }
    double volume() const;

  private:
    std::array<double, 3> semi_axes_;
    double relative_permittivity_;
};

//! V(r) = V0 exp(-a (x^2 + y^2) - b z^2) in the body frame.
class GaussianPotential
{
  public:
    //! V0 in J, a and b in 1/m^2.
    GaussianPotential(double V0, double a, double b);

    double V0() const { return V0_; }
    double a() const { return a_; }
    double b() const { return b_; }

  private:
    double V0_;
    double a_;
    double b_;
};

//! Incoming/outgoing photon directions and polarizations.
class PhotonChannel
{
  public:
    //! Throws DomainError unless all vectors are unit length and each
    //! polarization is transverse to its direction (1e-10).
    PhotonChannel(double k, Vec3 k_in, Vec3 k_out, Vec3 pol_in, Vec3 pol_out);

    double k() const { return k_; }
    const Vec3& k_in() const { return k_in_; }
    const Vec3& k_out() const { return k_out_; }
    const Vec3& pol_in() const { return pol_in_; }
    const Vec3& pol_out() const { return pol_out_; }

  private:
    double k_;
    Vec3 k_in_, k_out_, pol_in_, pol_out_;
};

//---------------------------------------------------------------------------//
// Rayleigh (dipole) scattering
//---------------------------------------------------------------------------//

/*!
 * Depolarization factors
 * L_i = (a_x a_y a_z / 2) ∫_0^∞ ds / ((s + a_i^2) sqrt((s+a_x^2)(s+a_y^2)(s+a_z^2)))
 * by adaptive quadrature. The factors sum to one.
 */
std::array<double, 3> depolarization_factors(std::array<double, 3> semi_axes);

//! Body-frame diagonal tensor α_i = ε0 V (ε_r - 1) / (1 + L_i (ε_r - 1)).
PolarizabilityTensor polarizability_from_geometry(const EllipsoidGeometry& g);

//! Same, with externally supplied depolarization factors.
PolarizabilityTensor
polarizability_from_depolarization(const EllipsoidGeometry& g,
                                   std::array<double, 3> factors);

//! f = k^2 / (4π ε0) ξ'·(α ξ), in m.
double dipole_amplitude(const PhotonChannel& ch,
                        const PolarizabilityTensor& alpha);

//! (k^2 / 4π ε0)^2 Tr[P_out α P_in αᵀ]: |f|^2 summed over both incoming
//! and both outgoing polarizations, with P = I - k̂ k̂ᵀ. In m^2.
double polarization_summed_intensity(double k, const Vec3& k_in,
                                     const Vec3& k_out,
                                     const PolarizabilityTensor& alpha);

/*!
 * Polarization-averaged squared amplitude difference,
 * (1/4) (k^2 / 4π ε0)^2 Tr[P_out Δα P_in Δαᵀ], in m^2.
 *
 * The factor 1/4 averages over both incoming and outgoing polarizations;
 * this is the convention under which the closed-form photon rates hold.
 */
double polarization_reduced_difference(double k, const Vec3& k_in,
                                       const Vec3& k_out,
                                       const PolarizabilityTensor& delta_alpha);

//---------------------------------------------------------------------------//
// Born scattering from the Gaussian ellipsoidal potential
//---------------------------------------------------------------------------//

/*!
 * Born amplitude of a body at a fixed orientation,
 * f(Δk) = F exp(-Δk̃x²/4a - Δk̃y²/4a - Δk̃z²/4b) with Δk̃ = R⁻¹ Δk and
 * F = (m V0 / 2π hbar^2)(π/a) sqrt(π/b).
 *
 * The overall sign is positive; only |Δf|^2 enters any rate.
 */
class GaussianBornAmplitude
{
  public:
    GaussianBornAmplitude(const GaussianPotential& pot, double mass,
                          const EulerAngles& orientation);

    double operator()(const Vec3& delta_k) const;
    //! F, the amplitude at zero momentum transfer.
    double forward_amplitude() const { return forward_; }

  private:
    Mat3 quadratic_form_; // R diag(1/4a, 1/4a, 1/4b) Rᵀ
    double forward_;
};

double born_gaussian_amplitude(const Vec3& delta_k, const GaussianPotential& pot,
                               double mass, const EulerAngles& orientation);

//! F for the given potential and scatterer mass, in m.
double born_forward_amplitude(const GaussianPotential& pot, double mass);

struct FirstOrderDifference
{
    double value;               //!< f_0 - f_β to first order, in m
    double expansion_parameter; //!< max over both orientations of Δk̃·M·Δk̃/4
};

/*!
 * Long-wavelength difference f_0 - f_β between the reference orientation
 * and the orientation (0, β, 0):
 * F (D/4) [(Δkx² - Δkz²) sin²β + 2 Δkx Δkz sinβ cosβ], D = (a - b)/(ab).
 *
 * Valid while expansion_parameter << 1; the caller owns that check.
 */
class FirstOrderBornDifference
{
  public:
    FirstOrderBornDifference(const GaussianPotential& pot, double mass,
                             double beta);

    FirstOrderDifference operator()(const Vec3& delta_k) const;

  private:
    double scale_; // F D / 4
    double s2_, sc_;
    double inv4a_, inv4b_;
    double cos_, sin_;
};

FirstOrderDifference born_gaussian_first_order_diff(const Vec3& delta_k,
                                                    const GaussianPotential& pot,
                                                    double mass, double beta);

} // namespace rotodec
