#include "rotodec/rates.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "rotodec/constants.hpp"
#include "rotodec/errors.hpp"

namespace rotodec
{
namespace
{
using constants::c;
using constants::epsilon_0;
using constants::hbar;
using constants::pi;

//! Closed-form photon rates share λ = c/(72 ε0²) · [2·6!·ζ(7)·k_th^7] · L.
double photon_prefactor()
{
    return c / (72 * epsilon_0 * epsilon_0);
}

template<class Real>
struct PrintedCoefficients
{
    Real A, B, C, a1, a2, a3, a4, a5, a6;

    PrintedCoefficients(std::array<double, 3> alpha, const EulerAngles& o)
    {
        A = Real(alpha[0]) - Real(alpha[1]);
        B = Real(alpha[0]) - Real(alpha[2]);
        C = Real(alpha[1]) - Real(alpha[2]);
        const Real ca2 = std::cos(2 * Real(o.alpha));
        const Real sa2 = std::sin(2 * Real(o.alpha));
        const Real cg2 = std::cos(2 * Real(o.gamma));
        const Real sg2 = std::sin(2 * Real(o.gamma));
        const Real cb = std::cos(Real(o.beta));
        const Real cb2 = std::cos(2 * Real(o.beta));
        const Real sb = std::sin(Real(o.beta));
        const Real sb_sq = sb * sb;

        a1 = 3 - 3 * ca2 * cg2 - ca2 * cb2 * cg2 + 4 * cb * sa2 * sg2;
        a2 = a3 = 2 - cb2;
        a4 = a5 = 2 * ca2 * sb_sq + 2 * cg2 * sb_sq;
        a6 = 2 * cb2;
    }

    Real L() const
    {
        return A * A * a1 + B * B * a2 + C * C * a3 + A * B * a4 + A * C * a5
               - B * C * a6;
    }
};

double anisotropy_scale(std::array<double, 3> d)
{
    auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    return (*hi - *lo) * (*hi - *lo);
}

double eigen_anisotropy_scale(const PolarizabilityTensor& t)
{
    Eigen::SelfAdjointEigenSolver<Mat3> es(t.components(),
                                           Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return anisotropy_scale({ev(0), ev(1), ev(2)});
}

double safe_ratio(double num, double den)
{
    return den != 0 ? num / den : 0;
}

void require_finite_angle(double beta)
{
    if (!std::isfinite(beta))
        throw DomainError("angle must be finite");
}

RotationalRate integrate_photon_difference(const PolarizabilityTensor& delta,
                                           double material,
                                           const ThermalPhotonBath& bath,
                                           const SphereGrid& grid)
{
    if (grid.degree() < 4)
        throw DomainError("photon quadrature needs sphere grid degree >= 4");
    const double kth = thermal_photon_wavenumber(bath.temperature());

    const double angular = double_sphere_integrate(
        [&](const Vec3& k_in, const Vec3& k_out) {
            return polarization_reduced_difference(kth, k_in, k_out, delta);
        },
        grid);
    // |Δf|² ∝ k^4, so ∬|Δf|²(k) = angular · (k / k_th)^4
    const double thermal = radial_integrate(
        [](double k) { return std::pow(k, 6); }, radial_weight(bath));

    RotationalRate r;
    r.lambda = 0.5 * c * thermal * angular / std::pow(kth, 4);
    r.breakdown.prefactor = photon_prefactor();
    r.breakdown.thermal_moment = thermal;
    r.breakdown.material_factor = material;
    r.breakdown.angular_factor = safe_ratio(
        r.lambda, r.breakdown.prefactor * thermal * material);
    return r;
}
} // namespace

double RotationalRate::coherence_time() const
{
    return lambda > 0 ? 1 / lambda : std::numeric_limits<double>::infinity();
}

double TranslationalRate::coherence_time() const
{
    return rate > 0 ? 1 / rate : std::numeric_limits<double>::infinity();
}

//---------------------------------------------------------------------------//
// Photon, closed forms
//---------------------------------------------------------------------------//

AngularCoefficients angular_coefficients(std::array<double, 3> alpha_diag,
                                         const EulerAngles& omega)
{
    PrintedCoefficients<double> p(alpha_diag, omega);
    return {p.A, p.B, p.C, p.a1, p.a2, p.a3, p.a4, p.a5, p.a6};
}

double photon_L_factor(std::array<double, 3> alpha_diag,
                       const EulerAngles& omega)
{
    // The printed combination cancels at O(1) for small rotations (L is
    // O(angle²)), so it is evaluated in extended precision.
    PrintedCoefficients<long double> p(alpha_diag, omega);
    const long double L = p.L();
    if (L >= 0)
        return static_cast<double>(L);

    const long double scale = p.A * p.A + p.B * p.B + p.C * p.C;
    if (-L <= 64 * LDBL_EPSILON * 8 * scale)
        return 0;
    throw NumericError("angular factor L is negative beyond rounding",
                       static_cast<double>(L));
}

RotationalRate photon_rate_closed(const PolarizabilityTensor& alpha,
                                  const EulerAngles& omega,
                                  const ThermalPhotonBath& bath)
{
    if (!alpha.is_diagonal())
        throw DomainError("closed-form photon rate needs the body-frame "
                          "(diagonal) polarizability");
    const auto diag = alpha.diagonal_values();
    const double L
        = rotation_from_euler(omega).is_identity(4 * DBL_EPSILON)
              ? 0.0
              : photon_L_factor(diag, omega);

    RotationalRate r;
    r.breakdown.prefactor = photon_prefactor();
    r.breakdown.thermal_moment = radial_thermal_moment_closed(6, bath);
    r.breakdown.material_factor = anisotropy_scale(diag);
    r.breakdown.angular_factor
        = safe_ratio(L, r.breakdown.material_factor);
    r.lambda = r.breakdown.prefactor * r.breakdown.thermal_moment * L;
    return r;
}

RotationalRate photon_rate_symmetric(double alpha_x, double alpha_z,
                                     double beta,
                                     const ThermalPhotonBath& bath)
{
    require_finite_angle(beta);
    const double s = std::sin(beta);
    RotationalRate r;
    r.breakdown.prefactor = photon_prefactor();
    r.breakdown.thermal_moment = radial_thermal_moment_closed(6, bath);
    r.breakdown.material_factor = (alpha_x - alpha_z) * (alpha_x - alpha_z);
    r.breakdown.angular_factor = 8 * s * s;
    r.lambda = r.breakdown.product();
    return r;
}

//---------------------------------------------------------------------------//
// Photon, quadrature
//---------------------------------------------------------------------------//

RotationalRate photon_rate_numeric(const PolarizabilityTensor& alpha,
                                   const EulerAngles& omega,
                                   const ThermalPhotonBath& bath,
                                   const SphereGrid& grid)
{
    const PolarizabilityTensor delta = alpha - rotate_tensor(alpha, omega);
    return integrate_photon_difference(delta, eigen_anisotropy_scale(alpha),
                                       bath, grid);
}

RotationalRate photon_rate_numeric_between(const PolarizabilityTensor& alpha,
                                           const EulerAngles& a,
                                           const EulerAngles& b,
                                           const ThermalPhotonBath& bath,
                                           const SphereGrid& grid)
{
    const PolarizabilityTensor delta
        = lab_frame_tensor(alpha, a) - lab_frame_tensor(alpha, b);
    return integrate_photon_difference(delta, eigen_anisotropy_scale(alpha),
                                       bath, grid);
}

//---------------------------------------------------------------------------//
// Gas
//---------------------------------------------------------------------------//

namespace
{
RateBreakdown gas_breakdown(const GaussianPotential& pot,
                            const GasEnvironment& env)
{
    const double m = env.particle_mass();
    const double D = (pot.a() - pot.b()) / (pot.a() * pot.b());
    const double FD = born_forward_amplitude(pot, m) * D;
    RateBreakdown b;
    b.prefactor = env.number_density() * hbar / (2 * m);
    b.thermal_moment = radial_thermal_moment_closed(7, env);
    b.material_factor = FD * FD;
    return b;
}
} // namespace

RotationalRate gas_rate_closed(const GaussianPotential& pot,
                               const GasEnvironment& env, double beta)
{
    require_finite_angle(beta);
    const double m = env.particle_mass();
    const double kT = constants::k_B * env.temperature();
    const double a = pot.a(), b = pot.b();
    const double s = std::sin(beta);

    // sqrt(2π m^7 (kT)^5) / hbar^8 grouped to stay inside double range
    const double thermal_mass = std::sqrt(2 * pi)
                                * std::pow(m / (hbar * hbar), 3.5)
                                * std::pow(kT, 2.5) / hbar;
    const double shape = (a - b) * (a - b) * pot.V0() * pot.V0()
                         / (std::pow(a, 4) * std::pow(b, 3));

    RotationalRate r;
    r.lambda = 32 * pi / 15 * env.number_density() * thermal_mass * shape
               * s * s;
    r.breakdown = gas_breakdown(pot, env);
    r.breakdown.angular_factor = 64 * pi * pi / 45 * s * s;
    return r;
}

RotationalRate gas_rate_numeric(const GaussianPotential& pot,
                                const GasEnvironment& env, double beta,
                                const SphereGrid& grid,
                                BornExpansion expansion)
{
    require_finite_angle(beta);
    const double m = env.particle_mass();

    std::function<double(double)> angular;
    const FirstOrderBornDifference first(pot, m, beta);
    const GaussianBornAmplitude f_ref(pot, m, EulerAngles{});
    const GaussianBornAmplitude f_rot(pot, m, EulerAngles{0, beta, 0});

    if (expansion == BornExpansion::first_order)
    {
        angular = [&](double k) {
            return double_sphere_integrate(
                [&](const Vec3& k_in, const Vec3& k_out) {
                    double d = first(k * (k_out - k_in)).value;
                    return d * d;
                },
                grid);
        };
    }
    else
    {
        angular = [&](double k) {
            return double_sphere_integrate(
                [&](const Vec3& k_in, const Vec3& k_out) {
                    const Vec3 dk = k * (k_out - k_in);
                    double d = f_ref(dk) - f_rot(dk);
                    return d * d;
                },
                grid);
        };
    }

    RadialOptions opts;
    opts.relative_tolerance = 1e-10;
    // (N/2V) ∫ dk k² μ(k) (hbar k / m) ∬ |Δf|²
    const double radial = radial_integrate(
        [&](double k) { return k * k * (hbar * k / m) * angular(k); },
        radial_weight(env), opts);

    RotationalRate r;
    r.lambda = 0.5 * env.number_density() * radial;
    r.breakdown = gas_breakdown(pot, env);
    r.breakdown.thermal_moment = radial_thermal_moment(7, env);
    r.breakdown.angular_factor = safe_ratio(
        r.lambda, r.breakdown.prefactor * r.breakdown.thermal_moment
                      * r.breakdown.material_factor);
    return r;
}

//---------------------------------------------------------------------------//
// Translational comparison
//---------------------------------------------------------------------------//

TranslationalRate translational_rate(double radius, double rel_permittivity,
                                     const ThermalPhotonBath& bath,
                                     double delta_x)
{
    if (!(radius > 0) || !std::isfinite(radius))
        throw DomainError("radius must be positive");
    if (!(rel_permittivity >= 1) || !std::isfinite(rel_permittivity))
        throw DomainError("relative permittivity must be at least 1");
    if (!(delta_x >= 0) || !std::isfinite(delta_x))
        throw DomainError("separation must be non-negative");

    const double V = 4.0 / 3.0 * pi * radius * radius * radius;
    const double cm = (rel_permittivity - 1) / (rel_permittivity + 2);
    const double kth = thermal_photon_wavenumber(bath.temperature());
    constexpr double fact8 = 40320;

    TranslationalRate t;
    t.rate = fact8 / (2 * pi * pi * pi) * V * V * c * cm * cm
             * std::pow(kth, 9) * zeta_integral(9) * delta_x * delta_x;
    return t;
}

//---------------------------------------------------------------------------//

namespace nanodiamond
{
EllipsoidGeometry geometry()
{
    return EllipsoidGeometry(semi_axes, relative_permittivity);
}

PolarizabilityTensor polarizability()
{
    return polarizability_from_geometry(geometry());
}
} // namespace nanodiamond

std::vector<Table1Row> table1(double beta)
{
    require_finite_angle(beta);
    const PolarizabilityTensor alpha = nanodiamond::polarizability();
    const double dx = nanodiamond::radius * std::sin(beta);

    std::vector<Table1Row> rows;
    for (double T : nanodiamond::temperatures)
    {
        ThermalPhotonBath bath(T);
        Table1Row row;
        row.temperature = T;
        row.rotational_time
            = photon_rate_closed(alpha, EulerAngles{0, beta, 0}, bath)
                  .coherence_time();
        row.translational_time
            = translational_rate(nanodiamond::radius,
                                 nanodiamond::relative_permittivity, bath,
                                 std::fabs(dx))
                  .coherence_time();
        rows.push_back(row);
    }
    return rows;
}

} // namespace rotodec
