#include "rotodec/tensor.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "rotodec/errors.hpp"

namespace rotodec
{
PolarizabilityTensor::PolarizabilityTensor(const Mat3& components)
{
    if (!components.allFinite())
        throw DomainError("tensor entries must be finite");
    double scale = components.cwiseAbs().maxCoeff();
    double asym = (components - components.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * scale)
        throw DomainError("polarizability tensor is not symmetric");
    components_ = 0.5 * (components + components.transpose());
}

PolarizabilityTensor
PolarizabilityTensor::diagonal(double ax, double ay, double az)
{
    return PolarizabilityTensor(Vec3(ax, ay, az).asDiagonal().toDenseMatrix());
}

bool PolarizabilityTensor::is_diagonal(double rel_tol) const
{
    double scale = components_.cwiseAbs().maxCoeff();
    Mat3 off = components_;
    off.diagonal().setZero();
    return off.cwiseAbs().maxCoeff() <= rel_tol * scale;
}

std::array<double, 3> PolarizabilityTensor::diagonal_values() const
{
    return {components_(0, 0), components_(1, 1), components_(2, 2)};
}

bool PolarizabilityTensor::is_positive_semidefinite(double rel_tol) const
{
    Eigen::SelfAdjointEigenSolver<Mat3> es(components_,
                                           Eigen::EigenvaluesOnly);
    double scale = components_.cwiseAbs().maxCoeff();
    return es.eigenvalues().minCoeff() >= -rel_tol * scale;
}

} // namespace rotodec
