#pragma once

#include "tensor.hpp"

namespace rotodec
{
//---------------------------------------------------------------------------//
/*!
 * Orientation in the z-y-z convention, R = Rz(alpha) Ry(beta) Rz(gamma),
 * acting actively on column vectors.
 *
 * A body at orientation Ω has its symmetry axis along R(Ω) ẑ and lab-frame
 * tensor R(Ω) t Rᵀ(Ω). Canonical ranges after normalization:
 * alpha, gamma in [0, 2π), beta in [0, π]; at beta = 0 or π the twist is
 * folded into alpha and gamma = 0.
 */
struct EulerAngles
{
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
};

class RotationMatrix
{
  public:
    RotationMatrix() : m_(Mat3::Identity()) {}
    //! Throws DomainError unless RᵀR = I and det R = 1 within 1e-12.
    explicit RotationMatrix(const Mat3& m);

    const Mat3& matrix() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }

    RotationMatrix inverse() const { return from_trusted(m_.transpose()); }
    Vec3 operator*(const Vec3& v) const { return m_ * v; }
    RotationMatrix operator*(const RotationMatrix& o) const
    {
        return from_trusted(m_ * o.m_);
    }

    //! Max-norm distance to the identity is at most tol.
    bool is_identity(double tol = 0) const;

  private:
    static RotationMatrix from_trusted(const Mat3& m)
    {
        RotationMatrix r;
        r.m_ = m;
        return r;
    }
    friend RotationMatrix rotation_from_euler(const EulerAngles&);

    Mat3 m_;
};

//! Unit direction; symmetric-rotor orientations are represented by their axis.
class AxisDirection
{
  public:
    AxisDirection() : n_(Vec3::UnitZ()) {}
    //! Normalizes v; throws DomainError for zero or non-finite vectors.
    explicit AxisDirection(const Vec3& v);

    static AxisDirection from_euler(const EulerAngles& omega);

    const Vec3& vector() const { return n_; }

  private:
    Vec3 n_;
};

RotationMatrix rotation_from_euler(const EulerAngles& omega);

//! Inverse of rotation_from_euler, with canonical ranges and the
//! gimbal convention documented on EulerAngles.
EulerAngles euler_from_rotation(const RotationMatrix& r);

EulerAngles normalized(const EulerAngles& omega);

//! Rᵀ(Ω) t R(Ω): the body-frame tensor seen from a frame rotated by Ω.
PolarizabilityTensor
rotate_tensor(const PolarizabilityTensor& t, const EulerAngles& omega);

//! R(a) t Rᵀ(a): lab-frame tensor of a body at absolute orientation a.
PolarizabilityTensor
lab_frame_tensor(const PolarizabilityTensor& body, const EulerAngles& a);

//! Euler angles of R(b)⁻¹ R(a).
EulerAngles relative_orientation(const EulerAngles& a, const EulerAngles& b);

//! arccos(n1·n2) in [0, π].
double axis_angle_between(const AxisDirection& n1, const AxisDirection& n2);

} // namespace rotodec
