#include "rotodec/quadrature.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rotodec/constants.hpp"

namespace rotodec
{
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights)
{
    if (n < 1)
        throw DomainError("Gauss-Legendre rule needs at least one node");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i)
    {
        // Tricomi initial guess, then Newton on P_n
        double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter)
        {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k)
            {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16)
                break;
        }
        double w = 2 / ((1 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[i] = weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        nodes[n / 2] = 0;
}

SphereGrid build_sphere_grid(int degree)
{
    if (degree < 2)
        throw DomainError("sphere grid degree must be at least 2");
    // GL with n nodes is exact to degree 2n-1 in cos(theta); the azimuthal
    // trapezoid rule with m nodes is exact for harmonics below m.
    const int n_polar = degree / 2 + 1;
    const int n_azimuth = degree + 1;

    std::vector<double> x, w;
    gauss_legendre(n_polar, x, w);

    std::vector<SphereNode> nodes;
    nodes.reserve(static_cast<std::size_t>(n_polar * n_azimuth));
    const double dphi = 2 * constants::pi / n_azimuth;
    for (int i = 0; i < n_polar; ++i)
    {
        double sin_theta = std::sqrt((1 - x[i]) * (1 + x[i]));
        for (int j = 0; j < n_azimuth; ++j)
        {
            double phi = dphi * j;
            nodes.push_back({Vec3(sin_theta * std::cos(phi),
                                  sin_theta * std::sin(phi), x[i]),
                             w[i] * dphi});
        }
    }
    return SphereGrid(degree, std::move(nodes));
}

void report_nonfinite_node(std::size_t i, std::size_t j, double value)
{
    std::ostringstream os;
    os << "integrand is not finite (" << value << ") at node pair (" << i
       << ", " << j << ")";
    throw NumericError(os.str(), value);
}

//---------------------------------------------------------------------------//

double RadialWeight::profile(double x) const
{
    switch (kind)
    {
        case RadialWeightKind::planck:
            // expm1 keeps the 1/x behaviour accurate as x -> 0
            return amplitude / std::expm1(x);
        case RadialWeightKind::gaussian:
            return amplitude * std::exp(-x * x);
    }
    return 0;
}

double RadialWeight::default_x_max() const
{
    return kind == RadialWeightKind::planck ? 80.0 : 9.0;
}

RadialResult radial_integrate_detailed(const std::function<double(double)>& f,
                                       const RadialWeight& weight,
                                       const RadialOptions& options)
{
    if (!(weight.k_scale > 0))
        throw DomainError("radial weight scale must be positive");
    const double x_max
        = options.x_max > 0 ? options.x_max : weight.default_x_max();
    const double scale = weight.k_scale;

    auto integrand = [&](double x) {
        return f(scale * x) * weight.profile(x);
    };

    double error = 0;
    double l1 = 0;
    double value
        = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            integrand, 0.0, x_max, options.max_depth,
            options.relative_tolerance, &error, &l1);

    if (!std::isfinite(value))
        throw NumericError("radial integral is not finite", error);
    if (error > options.relative_tolerance * l1)
    {
        std::ostringstream os;
        os << "radial quadrature did not converge: error estimate " << error
           << " vs L1 norm " << l1;
        throw NumericError(os.str(), error * scale);
    }
    return {value * scale, error * scale};
}

} // namespace rotodec
