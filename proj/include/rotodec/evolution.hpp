#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "environment.hpp"
#include "orientation.hpp"
#include "tensor.hpp"

namespace rotodec
{
using ComplexMatrix = Eigen::MatrixXcd;

//---------------------------------------------------------------------------//
/*!
 * Finite set of orientation pointer states.
 *
 * Symmetric-rotor grids hold axis directions; full grids hold Euler angles
 * (their axes R(Ω)ẑ are also available).
 */
class OrientationGrid
{
  public:
    enum class Kind
    {
        symmetric_rotor,
        full
    };

    //! Throws DomainError for fewer than two points or duplicates.
    static OrientationGrid symmetric_rotor(std::vector<AxisDirection> axes);
    static OrientationGrid full(std::vector<EulerAngles> orientations);

    Kind kind() const { return kind_; }
    std::size_t size() const { return axes_.size(); }
    const std::vector<AxisDirection>& axes() const { return axes_; }
    //! Empty for symmetric-rotor grids.
    const std::vector<EulerAngles>& orientations() const
    {
        return orientations_;
    }

  private:
    Kind kind_ = Kind::full;
    std::vector<AxisDirection> axes_;
    std::vector<EulerAngles> orientations_;
};

//! Decoherence rate between grid points i and j, in 1/s.
using RateFunction = std::function<double(std::size_t, std::size_t)>;

//---------------------------------------------------------------------------//
/*!
 * Density matrix ρ(Ω_i, Ω_j) on an orientation grid.
 *
 * Invariants checked at construction: Hermitian and unit trace within
 * 1e-12, diagonal real and non-negative.
 */
class OrientationDensityMatrix
{
  public:
    OrientationDensityMatrix(OrientationGrid grid, ComplexMatrix elements);

    //! |ψ><ψ| for amplitudes ψ (normalized internally).
    static OrientationDensityMatrix
    pure(OrientationGrid grid, const Eigen::VectorXcd& amplitudes);

    const OrientationGrid& grid() const { return grid_; }
    const ComplexMatrix& elements() const { return elements_; }
    std::complex<double> operator()(std::size_t i, std::size_t j) const
    {
        return elements_(static_cast<Eigen::Index>(i),
                         static_cast<Eigen::Index>(j));
    }
    std::size_t size() const { return grid_.size(); }

  private:
    struct Unchecked
    {
    };
    OrientationDensityMatrix(Unchecked, OrientationGrid grid,
                             ComplexMatrix elements)
        : grid_(std::move(grid)), elements_(std::move(elements))
    {
    }
    friend OrientationDensityMatrix
    evolve(const OrientationDensityMatrix&, const RateFunction&, double);

    OrientationGrid grid_;
    ComplexMatrix elements_;
};

/*!
 * ρ_ij(t) = ρ_ij(0) exp(-Λ_ij t); diagonal elements are copied unchanged.
 *
 * Throws DomainError for t < 0 and ContractError if rate_fn returns a
 * negative or non-finite value, a nonzero diagonal rate, or differs
 * between (i, j) and (j, i).
 */
OrientationDensityMatrix evolve(const OrientationDensityMatrix& rho0,
                                const RateFunction& rate_fn, double t);

//! |ρ_ij| / sqrt(ρ_ii ρ_jj). Throws DomainError if i == j, an index is out
//! of range or either population vanishes.
double coherence_visibility(const OrientationDensityMatrix& rho, std::size_t i,
                            std::size_t j);

//! Tr(ρ²).
double purity(const OrientationDensityMatrix& rho);

//! Smallest eigenvalue of ρ (positivity diagnostic).
double min_eigenvalue(const OrientationDensityMatrix& rho);

//! Λ0 sin²θ_ij with θ_ij the angle between grid axes i and j.
RateFunction symmetric_rotor_rate(const OrientationGrid& grid, double lambda0);

//! photon_rate_closed on relative_orientation(Ω_i, Ω_j) for a full grid.
RateFunction photon_rate_function(const OrientationGrid& grid,
                                  const PolarizabilityTensor& alpha,
                                  const ThermalPhotonBath& bath);

} // namespace rotodec
