#include "rotodec/scattering.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rotodec/constants.hpp"
#include "rotodec/errors.hpp"

namespace rotodec
{
namespace
{
constexpr double unit_tol = 1e-10;

void require_unit(const Vec3& v, const char* what)
{
    if (!v.allFinite() || std::fabs(v.norm() - 1) > unit_tol)
        throw DomainError(std::string(what) + " must be a unit vector");
}

Mat3 transverse_projector(const Vec3& n)
{
    return Mat3::Identity() - n * n.transpose();
}

double amplitude_scale(double k)
{
    return k * k / (4 * constants::pi * constants::epsilon_0);
}
} // namespace

//---------------------------------------------------------------------------//
// Types
//---------------------------------------------------------------------------//

EllipsoidGeometry::EllipsoidGeometry(std::array<double, 3> semi_axes,
                                     double relative_permittivity)
    : semi_axes_(semi_axes), relative_permittivity_(relative_permittivity)
{
    for (double a : semi_axes)
        if (!(a > 0) || !std::isfinite(a))
            throw DomainError("semi-axes must be positive");
    if (!(relative_permittivity >= 1) || !std::isfinite(relative_permittivity))
        throw DomainError("relative permittivity must be at least 1");
}

double EllipsoidGeometry::volume() const
{
    return 4.0 / 3.0 * constants::pi * semi_axes_[0] * semi_axes_[1]
           * semi_axes_[2];
}

GaussianPotential::GaussianPotential(double V0, double a, double b)
    : V0_(V0), a_(a), b_(b)
{
    if (!std::isfinite(V0))
        throw DomainError("V0 must be finite");
    if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("potential widths a and b must be positive");
}

PhotonChannel::PhotonChannel(double k, Vec3 k_in, Vec3 k_out, Vec3 pol_in,
                             Vec3 pol_out)
    : k_(k),
      k_in_(std::move(k_in)),
      k_out_(std::move(k_out)),
      pol_in_(std::move(pol_in)),
      pol_out_(std::move(pol_out))
{
    if (!(k > 0) || !std::isfinite(k))
        throw DomainError("wavenumber must be positive");
    require_unit(k_in_, "incoming direction");
    require_unit(k_out_, "outgoing direction");
    require_unit(pol_in_, "incoming polarization");
    require_unit(pol_out_, "outgoing polarization");
    if (std::fabs(pol_in_.dot(k_in_)) > unit_tol
        || std::fabs(pol_out_.dot(k_out_)) > unit_tol)
        throw DomainError("polarization must be transverse to propagation");
}

//---------------------------------------------------------------------------//
// Rayleigh
//---------------------------------------------------------------------------//

std::array<double, 3> depolarization_factors(std::array<double, 3> semi_axes)
{
    for (double a : semi_axes)
        if (!(a > 0) || !std::isfinite(a))
            throw DomainError("semi-axes must be positive");

    const double amax = *std::max_element(semi_axes.begin(), semi_axes.end());
    std::array<double, 3> sq;
    double prod = 1;
    for (int i = 0; i < 3; ++i)
    {
        double r = semi_axes[i] / amax;
        sq[i] = r * r;
        prod *= r;
    }

    std::array<double, 3> factors;
    for (int i = 0; i < 3; ++i)
    {
        // s = (u / (1 - u))^2 maps [0, ∞) to [0, 1) and turns the s^(-5/2)
        // tail into a smooth zero at u = 1
        auto integrand = [&](double u) {
            if (u >= 1)
                return 0.0;
            double t = 1 - u;
            double s = (u / t) * (u / t);
            double ds = 2 * u / (t * t * t);
            double root
                = std::sqrt((s + sq[0]) * (s + sq[1]) * (s + sq[2]));
            return ds / ((s + sq[i]) * root);
        };
        double error = 0;
        double value
            = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                integrand, 0.0, 1.0, 25, 1e-14, &error);
        if (!(error <= 1e-12 * value))
            throw NumericError("depolarization integral did not converge",
                               error);
        factors[i] = 0.5 * prod * value;
    }
    return factors;
}

PolarizabilityTensor
polarizability_from_depolarization(const EllipsoidGeometry& g,
                                   std::array<double, 3> factors)
{
    const double contrast = g.relative_permittivity() - 1;
    const double scale = constants::epsilon_0 * g.volume() * contrast;
    std::array<double, 3> alpha;
    for (int i = 0; i < 3; ++i)
        alpha[i] = scale / (1 + factors[i] * contrast);
    return PolarizabilityTensor::diagonal(alpha[0], alpha[1], alpha[2]);
}

PolarizabilityTensor polarizability_from_geometry(const EllipsoidGeometry& g)
{
    return polarizability_from_depolarization(
        g, depolarization_factors(g.semi_axes()));
}

double dipole_amplitude(const PhotonChannel& ch,
                        const PolarizabilityTensor& alpha)
{
    return amplitude_scale(ch.k())
           * ch.pol_out().dot(alpha.components() * ch.pol_in());
}

double polarization_summed_intensity(double k, const Vec3& k_in,
                                     const Vec3& k_out,
                                     const PolarizabilityTensor& alpha)
{
    require_unit(k_in, "incoming direction");
    require_unit(k_out, "outgoing direction");
    const Mat3& a = alpha.components();
    const double s = amplitude_scale(k);
    // Σ_λλ' |ξ'·α·ξ|² = Tr[P_out α P_in αᵀ] via Σ_λ ξ_i ξ_j = δ_ij - k̂_i k̂_j
    double trace = (transverse_projector(k_out) * a * transverse_projector(k_in)
                    * a.transpose())
                       .trace();
    return s * s * trace;
}

double polarization_reduced_difference(double k, const Vec3& k_in,
                                       const Vec3& k_out,
                                       const PolarizabilityTensor& delta_alpha)
{
    return 0.25 * polarization_summed_intensity(k, k_in, k_out, delta_alpha);
}

//---------------------------------------------------------------------------//
// Born
//---------------------------------------------------------------------------//

double born_forward_amplitude(const GaussianPotential& pot, double mass)
{
    using constants::hbar;
    using constants::pi;
    if (!(mass > 0))
        throw DomainError("scatterer mass must be positive");
    return mass * pot.V0() / (2 * pi * hbar * hbar) * (pi / pot.a())
           * std::sqrt(pi / pot.b());
}

GaussianBornAmplitude::GaussianBornAmplitude(const GaussianPotential& pot,
                                             double mass,
                                             const EulerAngles& orientation)
    : forward_(born_forward_amplitude(pot, mass))
{
    // R diag(1/4a, 1/4a, 1/4b) Rᵀ = I/4a + (1/4b - 1/4a) n nᵀ, n = R ẑ
    const double inv4a = 0.25 / pot.a();
    const double inv4b = 0.25 / pot.b();
    const Vec3 n = rotation_from_euler(orientation).matrix().col(2);
    quadratic_form_ = inv4a * Mat3::Identity()
                      + (inv4b - inv4a) * (n * n.transpose());
}

double GaussianBornAmplitude::operator()(const Vec3& delta_k) const
{
    return forward_ * std::exp(-delta_k.dot(quadratic_form_ * delta_k));
}

double born_gaussian_amplitude(const Vec3& delta_k, const GaussianPotential& pot,
                               double mass, const EulerAngles& orientation)
{
    return GaussianBornAmplitude(pot, mass, orientation)(delta_k);
}

FirstOrderBornDifference::FirstOrderBornDifference(const GaussianPotential& pot,
                                                   double mass, double beta)
    : inv4a_(0.25 / pot.a()),
      inv4b_(0.25 / pot.b()),
      cos_(std::cos(beta)),
      sin_(std::sin(beta))
{
    const double D = (pot.a() - pot.b()) / (pot.a() * pot.b());
    scale_ = born_forward_amplitude(pot, mass) * D / 4;
    s2_ = sin_ * sin_;
    sc_ = 2 * sin_ * cos_;
}

FirstOrderDifference
FirstOrderBornDifference::operator()(const Vec3& dk) const
{
    const double x = dk.x(), y = dk.y(), z = dk.z();
    FirstOrderDifference out;
    out.value = scale_ * ((x * x - z * z) * s2_ + x * z * sc_);

    // body-frame transfer for the rotated orientation, Ry(β)ᵀ Δk
    const double xr = cos_ * x - sin_ * z;
    const double zr = sin_ * x + cos_ * z;
    const double q0 = (x * x + y * y) * inv4a_ + z * z * inv4b_;
    const double qb = (xr * xr + y * y) * inv4a_ + zr * zr * inv4b_;
    out.expansion_parameter = std::max(q0, qb);
    return out;
}

FirstOrderDifference born_gaussian_first_order_diff(const Vec3& delta_k,
                                                    const GaussianPotential& pot,
                                                    double mass, double beta)
{
    return FirstOrderBornDifference(pot, mass, beta)(delta_k);
}

} // namespace rotodec
