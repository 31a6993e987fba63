#pragma once

#include <cmath>
#include <concepts>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "tensor.hpp"

namespace rotodec
{
//---------------------------------------------------------------------------//
/*!
 * Neumaier-compensated running sum.
 */
class CompensatedSum
{
  public:
    void add(double x)
    {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0;
    double comp_ = 0;
};

struct SphereNode
{
    Vec3 direction;
    double weight; //!< steradians
};

//---------------------------------------------------------------------------//
/*!
 * Product rule on the unit sphere: Gauss-Legendre in cos(theta) times a
 * uniform azimuthal rule. Integrates every polynomial in the direction
 * components of total degree <= degree exactly.
 */
class SphereGrid
{
  public:
    SphereGrid(int degree, std::vector<SphereNode> nodes)
        : degree_(degree), nodes_(std::move(nodes))
    {
    }

    int degree() const { return degree_; }
    const std::vector<SphereNode>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

  private:
    int degree_;
    std::vector<SphereNode> nodes_;
};

//! Default degree for dipole (polynomial) integrands.
inline constexpr int default_dipole_degree = 16;
//! Default degree for Born (Gaussian) integrands.
inline constexpr int default_born_degree = 24;

//! Throws DomainError for degree < 2.
SphereGrid build_sphere_grid(int degree);

//! Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
//! ascending.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

[[noreturn]] void report_nonfinite_node(std::size_t i, std::size_t j,
                                        double value);

//---------------------------------------------------------------------------//
/*!
 * Σ_ij w_i w_j f(n_i, n_j) over all ordered node pairs, with n_i the
 * incoming and n_j the outgoing direction.
 *
 * Summation order is fixed (row-major in node index) and compensated, so
 * results are bitwise reproducible. A non-finite f value throws
 * NumericError naming the node pair.
 */
template<class F>
    requires std::invocable<F&, const Vec3&, const Vec3&>
double double_sphere_integrate(F&& f, const SphereGrid& grid)
{
    const auto& nodes = grid.nodes();
    CompensatedSum total;
    for (std::size_t i = 0; i < nodes.size(); ++i)
    {
        CompensatedSum row;
        for (std::size_t j = 0; j < nodes.size(); ++j)
        {
            double v = f(nodes[i].direction, nodes[j].direction);
            if (!std::isfinite(v))
                report_nonfinite_node(i, j, v);
            row.add(nodes[j].weight * v);
        }
        total.add(nodes[i].weight * row.value());
    }
    return total.value();
}

//! Single-sphere counterpart, Σ_i w_i f(n_i).
template<class F>
    requires std::invocable<F&, const Vec3&>
double sphere_integrate(F&& f, const SphereGrid& grid)
{
    const auto& nodes = grid.nodes();
    CompensatedSum total;
    for (std::size_t i = 0; i < nodes.size(); ++i)
    {
        double v = f(nodes[i].direction);
        if (!std::isfinite(v))
            report_nonfinite_node(i, i, v);
        total.add(nodes[i].weight * v);
    }
    return total.value();
}

//---------------------------------------------------------------------------//
// Radial integration against thermal weights
//---------------------------------------------------------------------------//

enum class RadialWeightKind
{
    planck,  //!< 2 / (exp(k / k_scale) - 1)
    gaussian //!< amplitude * exp(-(k / k_scale)^2)
};

/*!
 * Thermal weight on the half line, evaluated in the dimensionless variable
 * x = k / k_scale.
 *
 * For photons k_scale = k_B T / (hbar c); for a Maxwell-Boltzmann gas
 * k_scale = sqrt(2 m k_B T) / hbar and amplitude = (k_scale^2 π)^(-3/2).
 */
struct RadialWeight
{
    RadialWeightKind kind = RadialWeightKind::planck;
    double k_scale = 1;
    double amplitude = 1;

    static RadialWeight planck(double k_scale)
    {
        return {RadialWeightKind::planck, k_scale, 2.0};
    }
    static RadialWeight gaussian(double k_scale, double amplitude)
    {
        return {RadialWeightKind::gaussian, k_scale, amplitude};
    }

    //! Dimensionless profile; amplitude included.
    double profile(double x) const;
    double operator()(double k) const { return profile(k / k_scale); }
    //! Default truncation of the x axis.
    double default_x_max() const;
};

struct RadialOptions
{
    double relative_tolerance = 1e-11;
    unsigned max_depth = 20;
    //! Upper end of the x integration range; <= 0 selects the default
    //! (80 for planck, 9 for gaussian). For f(k) = k^p with p <= 10 the
    //! neglected tail is below 1e-20 of the result in both cases.
    double x_max = 0;
};

struct RadialResult
{
    double value;
    double error_estimate;
};

//! ∫_0^∞ f(k) w(k) dk by adaptive Gauss-Kronrod on x = k / k_scale.
//! Throws NumericError if the tolerance is not met at max_depth.
RadialResult radial_integrate_detailed(const std::function<double(double)>& f,
                                       const RadialWeight& weight,
                                       const RadialOptions& options = {});

inline double radial_integrate(const std::function<double(double)>& f,
                               const RadialWeight& weight,
                               const RadialOptions& options = {})
{
    return radial_integrate_detailed(f, weight, options).value;
}

} // namespace rotodec
