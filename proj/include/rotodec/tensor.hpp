#pragma once

#include <array>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace rotodec
{
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

//---------------------------------------------------------------------------//
/*!
 * Real symmetric 3x3 polarizability tensor in C m^2 / V.
 *
 * Construction rejects matrices whose asymmetry exceeds 1e-10 relative to
 * the largest entry; the stored value is the exact symmetric part. Physical
 * dielectrics give positive semidefinite tensors, but differences of two
 * tensors (used for amplitude differences) are also represented here, so
 * definiteness is not enforced.
 */
class PolarizabilityTensor
{
  public:
    PolarizabilityTensor() : components_(Mat3::Zero()) {}
    explicit PolarizabilityTensor(const Mat3& components);

    static PolarizabilityTensor diagonal(double ax, double ay, double az);
    static PolarizabilityTensor isotropic(double a)
    {
        return diagonal(a, a, a);
    }

    const Mat3& components() const { return components_; }
    double operator()(int i, int j) const { return components_(i, j); }

    //! True when off-diagonal entries are below rel_tol times the largest.
    bool is_diagonal(double rel_tol = 1e-10) const;
    std::array<double, 3> diagonal_values() const;
    bool is_positive_semidefinite(double rel_tol = 1e-12) const;

    friend PolarizabilityTensor
    operator-(const PolarizabilityTensor& a, const PolarizabilityTensor& b)
    {
        return PolarizabilityTensor(a.components_ - b.components_);
    }

  private:
    Mat3 components_;
};

} // namespace rotodec
