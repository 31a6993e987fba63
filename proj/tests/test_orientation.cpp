#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "rotodec/constants.hpp"
#include "rotodec/errors.hpp"
#include "rotodec/orientation.hpp"
#include "test_helpers.hpp"

using namespace rotodec;
using constants::pi;
using testing::random_euler;

namespace
{
double max_abs(const Mat3& m)
{
    return m.cwiseAbs().maxCoeff();
}

//! Independent z-y-z construction through Eigen's angle-axis type.
Mat3 oracle_rotation(const EulerAngles& o)
{
    using Eigen::AngleAxisd;
    return (AngleAxisd(o.alpha, Vec3::UnitZ())
            * AngleAxisd(o.beta, Vec3::UnitY())
            * AngleAxisd(o.gamma, Vec3::UnitZ()))
        .toRotationMatrix();
}

PolarizabilityTensor random_symmetric()
{
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= i; ++j)
            m(i, j) = m(j, i) = testing::uniform(-2, 2);
    return PolarizabilityTensor(m);
}

std::array<double, 3> sorted_eigenvalues(const PolarizabilityTensor& t)
{
    Eigen::SelfAdjointEigenSolver<Mat3> es(t.components());
    auto ev = es.eigenvalues();
    std::array<double, 3> v{ev(0), ev(1), ev(2)};
    std::sort(v.begin(), v.end());
    return v;
}
} // namespace

TEST_SUITE("orientation")
{
    TEST_CASE("zero angles give the identity")
    {
        auto r = rotation_from_euler({0, 0, 0});
        CHECK(max_abs(r.matrix() - Mat3::Identity()) == 0);
        CHECK(r.is_identity());
    }

    TEST_CASE("quarter turn about y maps z to x")
    {
        auto r = rotation_from_euler({0, pi / 2, 0});
        Vec3 image = r * Vec3::UnitZ();
        CHECK((image - Vec3::UnitX()).norm() < 1e-15);
    }

    TEST_CASE("matrix matches an independent z-y-z composition")
    {
        for (int i = 0; i < 200; ++i)
        {
            auto o = random_euler();
            CHECK(max_abs(rotation_from_euler(o).matrix() - oracle_rotation(o))
                  < 1e-14);
        }
    }

    TEST_CASE("random rotations are orthogonal with unit determinant")
    {
        for (int i = 0; i < 500; ++i)
        {
            auto o = EulerAngles{testing::uniform(-50, 50),
                                 testing::uniform(-50, 50),
                                 testing::uniform(-50, 50)};
            const Mat3 m = rotation_from_euler(o).matrix();
            CHECK(max_abs(m.transpose() * m - Mat3::Identity()) < 1e-12);
            CHECK(std::fabs(m.determinant() - 1) < 1e-12);
        }
    }

    TEST_CASE("non-finite angles are rejected")
    {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        const double inf = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(rotation_from_euler({nan, 0, 0}), DomainError);
        CHECK_THROWS_AS(rotation_from_euler({0, inf, 0}), DomainError);
        CHECK_THROWS_AS(rotation_from_euler({0, 0, -inf}), DomainError);
    }

    TEST_CASE("rotation matrix validation")
    {
        Mat3 scaled = 2 * Mat3::Identity();
        CHECK_THROWS_AS(RotationMatrix{scaled}, DomainError);
        Mat3 reflection = Mat3::Identity();
        reflection(2, 2) = -1;
        CHECK_THROWS_AS(RotationMatrix{reflection}, DomainError);
        CHECK_NOTHROW(RotationMatrix{oracle_rotation({0.1, 0.2, 0.3})});
    }

    TEST_CASE("Euler round trip and canonical ranges")
    {
        for (int i = 0; i < 500; ++i)
        {
            auto o = EulerAngles{testing::uniform(-20, 20),
                                 testing::uniform(-20, 20),
                                 testing::uniform(-20, 20)};
            auto n = normalized(o);
            CHECK(n.alpha >= 0);
            CHECK(n.alpha < 2 * pi);
            CHECK(n.gamma >= 0);
            CHECK(n.gamma < 2 * pi);
            CHECK(n.beta >= 0);
            CHECK(n.beta <= pi);
            CHECK(max_abs(rotation_from_euler(n).matrix()
                          - rotation_from_euler(o).matrix())
                  < 1e-12);
        }
    }

    TEST_CASE("gimbal lock folds the twist into alpha")
    {
        auto n = normalized({0.4, 0, 0.9});
        CHECK(n.beta == 0);
        CHECK(n.gamma == 0);
        CHECK(n.alpha == doctest::Approx(1.3).epsilon(1e-14));

        auto m = normalized({0.4, pi, 0.9});
        CHECK(m.beta == doctest::Approx(pi));
        CHECK(m.gamma == 0);
        CHECK(max_abs(rotation_from_euler(m).matrix()
                      - rotation_from_euler({0.4, pi, 0.9}).matrix())
              < 1e-12);

        // Near (not at) the degeneracy the round trip stays accurate.
        for (double beta : {1e-9, 1e-6, pi - 1e-7})
        {
            EulerAngles o{2.1, beta, 0.7};
            CHECK(max_abs(rotation_from_euler(normalized(o)).matrix()
                          - rotation_from_euler(o).matrix())
                  < 1e-12);
        }
    }

    TEST_CASE("rotate_tensor with zero angles leaves the tensor unchanged")
    {
        auto t = random_symmetric();
        CHECK(max_abs(rotate_tensor(t, {0, 0, 0}).components()
                      - t.components())
              == 0);
    }

    TEST_CASE("quarter turn about y swaps the x and z principal values")
    {
        auto t = PolarizabilityTensor::diagonal(1.5, 1.5, 4.0);
        auto r = rotate_tensor(t, {0, pi / 2, 0});
        Mat3 expected = Vec3(4.0, 1.5, 1.5).asDiagonal();
        CHECK(max_abs(r.components() - expected) < 1e-15);
    }

    TEST_CASE("rotate_tensor preserves trace and spectrum")
    {
        for (int i = 0; i < 300; ++i)
        {
            auto t = random_symmetric();
            auto r = rotate_tensor(t, random_euler());
            CHECK(std::fabs(r.components().trace() - t.components().trace())
                  < 1e-12);
            auto a = sorted_eigenvalues(t), b = sorted_eigenvalues(r);
            for (int k = 0; k < 3; ++k)
                CHECK(std::fabs(a[k] - b[k]) < 1e-10);
        }
    }

    TEST_CASE("asymmetric tensors are rejected")
    {
        Mat3 m = Mat3::Identity();
        m(0, 1) = 1e-3;
        CHECK_THROWS_AS(PolarizabilityTensor{m}, DomainError);
        m(0, 1) = 1 + 1e-14;
        m(1, 0) = 1;
        CHECK_NOTHROW(PolarizabilityTensor{m});
        Mat3 bad = Mat3::Identity();
        bad(2, 2) = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(PolarizabilityTensor{bad}, DomainError);
    }

    TEST_CASE("relative orientation of equal configurations is the identity")
    {
        for (int i = 0; i < 50; ++i)
        {
            auto a = random_euler();
            auto r = relative_orientation(a, a);
            CHECK(rotation_from_euler(r).is_identity(1e-12));
        }
    }

    TEST_CASE("relative orientation to the reference returns the input")
    {
        for (int i = 0; i < 100; ++i)
        {
            auto a = random_euler();
            auto r = relative_orientation(a, {0, 0, 0});
            auto n = normalized(a);
            CHECK(std::fabs(r.alpha - n.alpha) < 1e-10);
            CHECK(std::fabs(r.beta - n.beta) < 1e-10);
            CHECK(std::fabs(r.gamma - n.gamma) < 1e-10);
        }
    }

    TEST_CASE("relative orientation composes as R(b)^-1 R(a)")
    {
        for (int i = 0; i < 300; ++i)
        {
            auto a = random_euler(), b = random_euler();
            Mat3 expected = oracle_rotation(b).transpose() * oracle_rotation(a);
            CHECK(max_abs(rotation_from_euler(relative_orientation(a, b))
                              .matrix()
                          - expected)
                  < 1e-12);
        }
    }

    TEST_CASE("relative rotation of a tensor equals the lab-frame difference")
    {
        for (int i = 0; i < 100; ++i)
        {
            auto body = random_symmetric();
            auto a = random_euler(), b = random_euler();
            Mat3 lab = (lab_frame_tensor(body, a) - lab_frame_tensor(body, b))
                           .components();
            Mat3 rel
                = (body - rotate_tensor(body, relative_orientation(a, b)))
                      .components();
            Mat3 ra = oracle_rotation(a);
            CHECK(max_abs(ra * rel * ra.transpose() - lab) < 1e-12);
        }
    }

    TEST_CASE("axis angle examples")
    {
        AxisDirection z(Vec3::UnitZ()), x(Vec3::UnitX()), mz(-Vec3::UnitZ());
        CHECK(axis_angle_between(z, z) == 0);
        CHECK(axis_angle_between(z, x) == doctest::Approx(pi / 2).epsilon(1e-15));
        CHECK(axis_angle_between(z, mz) == doctest::Approx(pi).epsilon(1e-15));
        // sin² treats antipodal axes as equivalent
        CHECK(std::pow(std::sin(axis_angle_between(z, mz)), 2) < 1e-30);
    }

    TEST_CASE("axis angle is symmetric and matches the Euler beta")
    {
        for (int i = 0; i < 200; ++i)
        {
            AxisDirection u(testing::random_unit()), v(testing::random_unit());
            CHECK(axis_angle_between(u, v) == axis_angle_between(v, u));
        }
        for (int i = 0; i < 100; ++i)
        {
            auto o = random_euler();
            auto n = AxisDirection::from_euler(o);
            CHECK(std::fabs(axis_angle_between(AxisDirection(Vec3::UnitZ()), n)
                            - o.beta)
                  < 1e-12);
        }
    }

    TEST_CASE("axis directions are normalized and validated")
    {
        AxisDirection d(Vec3(3, 0, 4));
        CHECK(std::fabs(d.vector().norm() - 1) < 1e-15);
        CHECK_THROWS_AS(AxisDirection(Vec3::Zero()), DomainError);
        CHECK_THROWS_AS(
            AxisDirection(Vec3(std::numeric_limits<double>::infinity(), 0, 0)),
            DomainError);
    }
}
