#include "rotodec/orientation.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Geometry>

#include "rotodec/constants.hpp"
#include "rotodec/errors.hpp"

namespace rotodec
{
namespace
{
constexpr double two_pi = 2 * constants::pi;

double wrap_two_pi(double x)
{
    double r = std::fmod(x, two_pi);
    if (r < 0)
        r += two_pi;
    // fmod of a value just below 0 can round up to exactly 2π
    if (r >= two_pi)
        r = 0;
    return r;
}

void require_finite(const EulerAngles& o)
{
    if (!std::isfinite(o.alpha) || !std::isfinite(o.beta)
        || !std::isfinite(o.gamma))
        throw DomainError("Euler angles must be finite");
}

Mat3 rot_z(double t)
{
    double c = std::cos(t), s = std::sin(t);
    Mat3 m;
    m << c, -s, 0, s, c, 0, 0, 0, 1;
    return m;
}

Mat3 rot_y(double t)
{
    double c = std::cos(t), s = std::sin(t);
    Mat3 m;
    m << c, 0, s, 0, 1, 0, -s, 0, c;
    return m;
}
} // namespace

//---------------------------------------------------------------------------//
// RotationMatrix / AxisDirection
//---------------------------------------------------------------------------//

RotationMatrix::RotationMatrix(const Mat3& m) : m_(m)
{
    if (!m.allFinite())
        throw DomainError("rotation matrix entries must be finite");
    if ((m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-12)
        throw DomainError("matrix is not orthogonal");
    if (std::fabs(m.determinant() - 1) > 1e-12)
        throw DomainError("matrix is not a proper rotation");
}

bool RotationMatrix::is_identity(double tol) const
{
    return (m_ - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol;
}

AxisDirection::AxisDirection(const Vec3& v)
{
    double n = v.norm();
    if (!std::isfinite(n) || n == 0)
        throw DomainError("axis direction must be a finite nonzero vector");
    n_ = v / n;
}

AxisDirection AxisDirection::from_euler(const EulerAngles& omega)
{
    return AxisDirection(rotation_from_euler(omega).matrix().col(2));
}

//---------------------------------------------------------------------------//
// Free functions
//---------------------------------------------------------------------------//

RotationMatrix rotation_from_euler(const EulerAngles& omega)
{
    require_finite(omega);
    return RotationMatrix::from_trusted(rot_z(omega.alpha) * rot_y(omega.beta)
                                        * rot_z(omega.gamma));
}

EulerAngles euler_from_rotation(const RotationMatrix& r)
{
    const Mat3& m = r.matrix();
    const double sb = std::hypot(m(2, 0), m(2, 1));
    // (1 + cos β) e^{i(α+γ)} and (1 - cos β) e^{i(α-γ)} from the upper block
    const double sum = std::atan2(m(1, 0) - m(0, 1), m(0, 0) + m(1, 1));
    const double diff = std::atan2(-(m(0, 1) + m(1, 0)), m(1, 1) - m(0, 0));

    EulerAngles e;
    if (sb < 1e-14)
    {
        e.beta = m(2, 2) > 0 ? 0 : constants::pi;
        e.alpha = m(2, 2) > 0 ? sum : diff;
        e.gamma = 0;
    }
    else
    {
        e.beta = std::atan2(sb, m(2, 2));
        e.alpha = std::atan2(m(1, 2), m(0, 2));
        // take γ from whichever combination is well conditioned
        e.gamma = m(2, 2) >= 0 ? sum - e.alpha : e.alpha - diff;
    }
    e.alpha = wrap_two_pi(e.alpha);
    e.gamma = wrap_two_pi(e.gamma);
    return e;
}

EulerAngles normalized(const EulerAngles& omega)
{
    return euler_from_rotation(rotation_from_euler(omega));
}

PolarizabilityTensor
rotate_tensor(const PolarizabilityTensor& t, const EulerAngles& omega)
{
    const Mat3 r = rotation_from_euler(omega).matrix();
    return PolarizabilityTensor(r.transpose() * t.components() * r);
}

PolarizabilityTensor
lab_frame_tensor(const PolarizabilityTensor& body, const EulerAngles& a)
{
    const Mat3 r = rotation_from_euler(a).matrix();
    return PolarizabilityTensor(r * body.components() * r.transpose());
}

EulerAngles relative_orientation(const EulerAngles& a, const EulerAngles& b)
{
    return euler_from_rotation(rotation_from_euler(b).inverse()
                               * rotation_from_euler(a));
}

double axis_angle_between(const AxisDirection& n1, const AxisDirection& n2)
{
    // atan2 form keeps full precision near 0 and π
    const Vec3& u = n1.vector();
    const Vec3& v = n2.vector();
    return std::atan2(u.cross(v).norm(), std::clamp(u.dot(v), -1.0, 1.0));
}

} // namespace rotodec
