#include <doctest.h>

#include <cmath>
#include <complex>

#include "rotodec/constants.hpp"
#include "rotodec/errors.hpp"
#include "rotodec/evolution.hpp"
#include "rotodec/rates.hpp"
#include "test_helpers.hpp"

using namespace rotodec;
using constants::pi;
using cd = std::complex<double>;

namespace
{
OrientationGrid two_point_grid(double beta)
{
    return OrientationGrid::full({{0, 0, 0}, {0, beta, 0}});
}

OrientationGrid rotor_grid(int n)
{
    std::vector<AxisDirection> axes;
    for (int i = 0; i < n; ++i)
    {
        const double t = pi * (i + 0.5) / n;
        axes.emplace_back(Vec3(std::sin(t) * std::cos(2.3 * i),
                               std::sin(t) * std::sin(2.3 * i), std::cos(t)));
    }
    return OrientationGrid::symmetric_rotor(axes);
}

OrientationDensityMatrix random_state(const OrientationGrid& g)
{
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(g.size()));
    for (Eigen::Index i = 0; i < psi.size(); ++i)
        psi(i) = cd(testing::uniform(-1, 1), testing::uniform(-1, 1));
    return OrientationDensityMatrix::pure(g, psi);
}

double max_abs_diff(const OrientationDensityMatrix& a,
                    const OrientationDensityMatrix& b)
{
    return (a.elements() - b.elements()).cwiseAbs().maxCoeff();
}

OrientationDensityMatrix uniform_mixture(const OrientationGrid& g)
{
    const auto n = static_cast<Eigen::Index>(g.size());
    ComplexMatrix m = ComplexMatrix::Identity(n, n) / double(n);
    return OrientationDensityMatrix(g, m);
}

RateFunction constant_rate(double l)
{
    return [l](std::size_t i, std::size_t j) { return i == j ? 0.0 : l; };
}
} // namespace

TEST_SUITE("evolution")
{
    TEST_CASE("grid construction")
    {
        CHECK_THROWS_AS(OrientationGrid::full({{0, 0, 0}}), DomainError);
        CHECK_THROWS_AS(OrientationGrid::full({{0, 1, 0}, {0, 1, 2 * pi}}),
                        DomainError);
        CHECK_THROWS_AS(OrientationGrid::symmetric_rotor(
                            {AxisDirection(Vec3::UnitZ()),
                             AxisDirection(Vec3(0, 0, 3))}),
                        DomainError);
        auto g = two_point_grid(0.5);
        CHECK(g.size() == 2);
        CHECK(g.kind() == OrientationGrid::Kind::full);
        CHECK(std::fabs(g.axes()[1].vector().x() - std::sin(0.5)) < 1e-15);
        CHECK(rotor_grid(5).orientations().empty());
    }

    TEST_CASE("density matrix invariants are enforced")
    {
        auto g = two_point_grid(0.5);
        ComplexMatrix m(2, 2);
        m << 0.5, cd(0.1, 0.2), cd(0.1, 0.2), 0.5;
        CHECK_THROWS_AS(OrientationDensityMatrix(g, m), DomainError);
        m << 0.6, 0, 0, 0.6;
        CHECK_THROWS_AS(OrientationDensityMatrix(g, m), DomainError);
        m << 1.2, 0, 0, -0.2;
        CHECK_THROWS_AS(OrientationDensityMatrix(g, m), DomainError);
        m << cd(0.5, 0.1), 0, 0, cd(0.5, -0.1);
        CHECK_THROWS_AS(OrientationDensityMatrix(g, m), DomainError);
        ComplexMatrix wrong = ComplexMatrix::Identity(3, 3) / 3.0;
        CHECK_THROWS_AS(OrientationDensityMatrix(g, wrong), DomainError);
        CHECK_THROWS_AS(OrientationDensityMatrix::pure(g, Eigen::VectorXcd::Zero(2)),
                        DomainError);
    }

    TEST_CASE("zero time leaves the state unchanged")
    {
        auto g = rotor_grid(6);
        auto rho = random_state(g);
        auto out = evolve(rho, symmetric_rotor_rate(g, 3.0), 0.0);
        CHECK(max_abs_diff(out, rho) == 0);
    }

    TEST_CASE("diagonal is untouched")
    {
        auto g = rotor_grid(8);
        auto rho = random_state(g);
        for (double t : {0.1, 1.0, 100.0, 1e6})
        {
            auto out = evolve(rho, symmetric_rotor_rate(g, 2.0), t);
            for (std::size_t i = 0; i < g.size(); ++i)
                CHECK(out(i, i) == rho(i, i));
            CHECK(out.elements().trace() == rho.elements().trace());
        }
    }

    TEST_CASE("two-point superposition decays at the pair rate")
    {
        auto g = two_point_grid(pi / 20);
        auto rate = photon_rate_function(g, nanodiamond::polarizability(),
                                         ThermalPhotonBath(300));
        const double lambda = rate(0, 1);
        CHECK(lambda
              == photon_rate_closed(nanodiamond::polarizability(), {0, pi / 20, 0},
                                    ThermalPhotonBath(300))
                     .lambda);
        auto rho0 = OrientationDensityMatrix::pure(g, Eigen::VectorXcd::Ones(2));

        // log-linear least squares over sampled times
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const int n = 20;
        for (int k = 0; k < n; ++k)
        {
            const double t = 5.0 / lambda * k / (n - 1);
            auto rho = evolve(rho0, rate, t);
            CHECK(std::fabs(std::abs(rho(0, 1)) - 0.5 * std::exp(-lambda * t)) < 1e-15);
            const double y = std::log(std::abs(rho(0, 1)));
            sx += t;
            sy += y;
            sxx += t * t;
            sxy += t * y;
        }
        const double fitted = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
        CHECK(testing::rel_diff(fitted, lambda) < 1e-10);
    }

    TEST_CASE("visibility examples")
    {
        auto g = two_point_grid(0.3);
        auto pure = OrientationDensityMatrix::pure(g, Eigen::VectorXcd::Ones(2));
        CHECK(std::fabs(coherence_visibility(pure, 0, 1) - 1) < 1e-15);
        CHECK(coherence_visibility(uniform_mixture(g), 0, 1) == 0);

        const double l = 42.0;
        auto decayed = evolve(pure, constant_rate(l), 1 / l);
        CHECK(std::fabs(coherence_visibility(decayed, 0, 1) - std::exp(-1.0)) < 1e-12);
    }

    TEST_CASE("visibility errors")
    {
        auto g = two_point_grid(0.3);
        Eigen::VectorXcd psi(2);
        psi << 1, 0;
        auto rho = OrientationDensityMatrix::pure(g, psi);
        CHECK_THROWS_AS(coherence_visibility(rho, 0, 1), DomainError);
        CHECK_THROWS_AS(coherence_visibility(rho, 0, 0), DomainError);
        CHECK_THROWS_AS(coherence_visibility(rho, 0, 5), DomainError);
    }

    TEST_CASE("purity examples")
    {
        auto g = rotor_grid(7);
        CHECK(std::fabs(purity(random_state(g)) - 1) < 1e-14);
        CHECK(std::fabs(purity(uniform_mixture(g)) - 1.0 / 7) < 1e-15);
    }

    TEST_CASE("purity is non-increasing in time")
    {
        auto g = rotor_grid(10);
        auto rho = random_state(g);
        auto rate = symmetric_rotor_rate(g, 1.5);
        double prev = purity(rho);
        for (double t = 0.05; t < 10; t *= 1.3)
        {
            const double p = purity(evolve(rho, rate, t));
            CHECK(p <= prev);
            prev = p;
        }
    }

    TEST_CASE("semigroup property")
    {
        auto g = rotor_grid(9);
        auto rho = random_state(g);
        auto rate = symmetric_rotor_rate(g, 0.8);
        for (int i = 0; i < 20; ++i)
        {
            const double t1 = testing::uniform(0, 3), t2 = testing::uniform(0, 3);
            CHECK(max_abs_diff(evolve(evolve(rho, rate, t1), rate, t2),
                               evolve(rho, rate, t1 + t2))
                  < 1e-12);
        }
    }

    TEST_CASE("Hermiticity and positivity are preserved")
    {
        auto g = rotor_grid(12);
        auto rate = symmetric_rotor_rate(g, 1.0);
        for (int i = 0; i < 10; ++i)
        {
            auto out = evolve(random_state(g), rate, testing::uniform(0, 5));
            CHECK((out.elements() - out.elements().adjoint()).cwiseAbs().maxCoeff() == 0);
            CHECK(min_eigenvalue(out) >= -1e-10);
        }
        auto full = OrientationGrid::full({{0, 0, 0}, {0, 0.4, 0}, {1, 1, 1}, {2, 0.3, 4}});
        auto prate = photon_rate_function(full, nanodiamond::polarizability(),
                                          ThermalPhotonBath(300));
        for (double t : {1e-3, 1e-2, 1e-1})
            CHECK(min_eigenvalue(evolve(random_state(full), prate, t)) >= -1e-10);
    }

    TEST_CASE("evolution input validation")
    {
        auto g = two_point_grid(0.3);
        auto rho = OrientationDensityMatrix::pure(g, Eigen::VectorXcd::Ones(2));
        CHECK_THROWS_AS(evolve(rho, constant_rate(1), -1), DomainError);
        CHECK_THROWS_AS(evolve(rho, constant_rate(-1), 1), ContractError);
        CHECK_THROWS_AS(evolve(rho, constant_rate(std::nan("")), 1), ContractError);
        CHECK_THROWS_AS(evolve(rho, [](std::size_t, std::size_t) { return 1.0; }, 1),
                        ContractError);
        CHECK_THROWS_AS(evolve(rho,
                               [](std::size_t i, std::size_t j) {
                                   return i == j ? 0.0 : double(i + 2 * j);
                               },
                               1),
                        ContractError);
    }

    TEST_CASE("symmetric rotor rate follows sin squared of the axis angle")
    {
        auto g = rotor_grid(6);
        auto rate = symmetric_rotor_rate(g, 5.0);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
            {
                const double s
                    = std::sin(axis_angle_between(g.axes()[i], g.axes()[j]));
                CHECK(std::fabs(rate(i, j) - 5.0 * s * s) < 1e-14);
                CHECK(rate(i, j) == rate(j, i));
            }
        CHECK_THROWS_AS(symmetric_rotor_rate(g, -1), DomainError);
    }

    TEST_CASE("symmetric rotor and full-grid photon rates agree")
    {
        const double beta = 0.6;
        auto alpha = nanodiamond::polarizability();
        ThermalPhotonBath bath(200);
        auto full = two_point_grid(beta);
        auto rotor = OrientationGrid::symmetric_rotor(full.axes());
        auto d = alpha.diagonal_values();
        const double l0 = photon_rate_symmetric(d[0], d[2], pi / 2, bath).lambda;
        CHECK(testing::rel_diff(symmetric_rotor_rate(rotor, l0)(0, 1),
                                photon_rate_function(full, alpha, bath)(0, 1))
              < 1e-12);
        CHECK_THROWS_AS(photon_rate_function(rotor, alpha, bath), DomainError);
    }
}
