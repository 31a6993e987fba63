#include "rotodec/evolution.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "rotodec/errors.hpp"
#include "rotodec/rates.hpp"

namespace rotodec
{
namespace
{
constexpr double tolerance = 1e-12;

bool same_axis(const AxisDirection& a, const AxisDirection& b)
{
    return (a.vector() - b.vector()).norm() < 1e-12;
}

bool same_rotation(const EulerAngles& a, const EulerAngles& b)
{
    return (rotation_from_euler(a).matrix() - rotation_from_euler(b).matrix())
               .norm()
           < 1e-12;
}
} // namespace

OrientationGrid OrientationGrid::symmetric_rotor(std::vector<AxisDirection> axes)
{
    if (axes.size() < 2)
        throw DomainError("orientation grid needs at least two points");
    for (std::size_t i = 0; i < axes.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (same_axis(axes[i], axes[j]))
                throw DomainError("orientation grid has duplicate axes");
    OrientationGrid g;
    g.kind_ = Kind::symmetric_rotor;
    g.axes_ = std::move(axes);
    return g;
}

OrientationGrid OrientationGrid::full(std::vector<EulerAngles> orientations)
{
    if (orientations.size() < 2)
        throw DomainError("orientation grid needs at least two points");
    for (std::size_t i = 0; i < orientations.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (same_rotation(orientations[i], orientations[j]))
                throw DomainError("orientation grid has duplicate points");
    OrientationGrid g;
    g.kind_ = Kind::full;
    for (const auto& o : orientations)
        g.axes_.push_back(AxisDirection::from_euler(o));
    g.orientations_ = std::move(orientations);
    return g;
}

//---------------------------------------------------------------------------//

OrientationDensityMatrix::OrientationDensityMatrix(OrientationGrid grid,
                                                   ComplexMatrix elements)
    : grid_(std::move(grid)), elements_(std::move(elements))
{
    const auto n = static_cast<Eigen::Index>(grid_.size());
    if (elements_.rows() != n || elements_.cols() != n)
        throw DomainError("density matrix size does not match grid");
    if (!elements_.allFinite())
        throw DomainError("density matrix has non-finite elements");
    if ((elements_ - elements_.adjoint()).cwiseAbs().maxCoeff() > tolerance)
        throw DomainError("density matrix is not Hermitian");
    for (Eigen::Index i = 0; i < n; ++i)
    {
        if (std::abs(elements_(i, i).imag()) > tolerance
            || elements_(i, i).real() < -tolerance)
            throw DomainError("density matrix diagonal must be real and "
                              "non-negative");
    }
    if (std::abs(elements_.trace() - 1.0) > tolerance)
        throw DomainError("density matrix trace must be 1");
}

OrientationDensityMatrix
OrientationDensityMatrix::pure(OrientationGrid grid,
                               const Eigen::VectorXcd& amplitudes)
{
    const double norm = amplitudes.norm();
    if (!(norm > 0) || !std::isfinite(norm))
        throw DomainError("pure state amplitudes must be nonzero and finite");
    const Eigen::VectorXcd psi = amplitudes / norm;
    return OrientationDensityMatrix(std::move(grid), psi * psi.adjoint());
}

//---------------------------------------------------------------------------//

OrientationDensityMatrix evolve(const OrientationDensityMatrix& rho0,
                                const RateFunction& rate_fn, double t)
{
    if (!(t >= 0) || !std::isfinite(t))
        throw DomainError("evolution time must be non-negative and finite");

    const std::size_t n = rho0.size();
    ComplexMatrix out = rho0.elements();
    for (std::size_t i = 0; i < n; ++i)
    {
        if (rate_fn(i, i) != 0)
            throw ContractError("rate function must vanish on the diagonal");
        for (std::size_t j = 0; j < i; ++j)
        {
            const double lij = rate_fn(i, j);
            const double lji = rate_fn(j, i);
            if (!std::isfinite(lij) || lij < 0)
                throw ContractError("rate function returned "
                                    + std::to_string(lij) + " for ("
                                    + std::to_string(i) + ", "
                                    + std::to_string(j) + ")");
            if (std::abs(lij - lji) > 1e-12 * std::max(lij, lji))
                throw ContractError("rate function is not symmetric");
            const double decay = std::exp(-lij * t);
            const auto ei = static_cast<Eigen::Index>(i);
            const auto ej = static_cast<Eigen::Index>(j);
            out(ei, ej) *= decay;
            out(ej, ei) = std::conj(out(ei, ej));
        }
    }
    return OrientationDensityMatrix(OrientationDensityMatrix::Unchecked{},
                                    rho0.grid(), std::move(out));
}

double coherence_visibility(const OrientationDensityMatrix& rho, std::size_t i,
                            std::size_t j)
{
    if (i == j || i >= rho.size() || j >= rho.size())
        throw DomainError("visibility needs two distinct grid indices");
    const double pi_ = rho(i, i).real();
    const double pj = rho(j, j).real();
    if (!(pi_ > 0) || !(pj > 0))
        throw DomainError("visibility undefined for an empty population");
    return std::abs(rho(i, j)) / std::sqrt(pi_ * pj);
}

double purity(const OrientationDensityMatrix& rho)
{
    return rho.elements().cwiseAbs2().sum();
}

double min_eigenvalue(const OrientationDensityMatrix& rho)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.elements(),
                                                    Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

RateFunction symmetric_rotor_rate(const OrientationGrid& grid, double lambda0)
{
    if (!(lambda0 >= 0) || !std::isfinite(lambda0))
        throw DomainError("rate scale must be non-negative");
    const auto axes = grid.axes();
    return [axes, lambda0](std::size_t i, std::size_t j) {
        if (i == j)
            return 0.0;
        const double s = std::sin(axis_angle_between(axes.at(i), axes.at(j)));
        return lambda0 * s * s;
    };
}

RateFunction photon_rate_function(const OrientationGrid& grid,
                                  const PolarizabilityTensor& alpha,
                                  const ThermalPhotonBath& bath)
{
    if (grid.kind() != OrientationGrid::Kind::full)
        throw DomainError("photon rate function needs a full orientation grid");
    const auto& o = grid.orientations();
    const std::size_t n = o.size();
    // Cache the symmetric table so rate_fn(i, j) == rate_fn(j, i) exactly.
    std::vector<double> table(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
        {
            const double l
                = photon_rate_closed(alpha, relative_orientation(o[i], o[j]),
                                     bath)
                      .lambda;
            table[i * n + j] = table[j * n + i] = l;
        }
    return [table = std::move(table), n](std::size_t i, std::size_t j) {
        return table.at(i * n + j);
    };
}

} // namespace rotodec
