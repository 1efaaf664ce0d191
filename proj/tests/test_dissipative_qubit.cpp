#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "phasediff/dissipative_qubit.hpp"
#include "phasediff/phase_stats.hpp"

using namespace phasediff;

namespace {
constexpr double kPi = std::numbers::pi;
using C = std::complex<double>;

Eigen::Matrix2cd coherent_rho(double alpha_p, double beta_p)
{
    Eigen::Vector2cd c(std::cos(alpha_p / 2), std::sin(alpha_p / 2) * std::polar(1.0, -beta_p));
    return c * c.adjoint();
}

double min_eigenvalue(const Eigen::Matrix2cd& rho)
{
    return Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(0.5 * (rho + rho.adjoint())).eigenvalues().minCoeff();
}
}

TEST_CASE("pauli operators")
{
    CHECK(sigma_plus()(1, 0) == C(1.0, 0.0));
    CHECK(sigma_minus() == sigma_plus().adjoint());
    const Eigen::Matrix2cd comm = sigma_plus() * sigma_minus() - sigma_minus() * sigma_plus();
    CHECK((comm - sigma_z()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spec construction")
{
    const auto s = QubitLindbladSpec::make(1.0, 0.1, 0.5, 0.3, 2.0);
    CHECK(s.gamma_plus == doctest::Approx(0.1 * (s.moments.N + 1)));
    CHECK(s.gamma_minus == doctest::Approx(0.1 * s.moments.N));
    CHECK(s.gamma_beta == doctest::Approx(s.gamma_plus + s.gamma_minus));
    CHECK(s.moments.R < 0.0);
    CHECK_THROWS_AS(QubitLindbladSpec::make(0.0, 0.1, 0.5, 0.3, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(QubitLindbladSpec::make(1.0, -0.1, 0.5, 0.3, 2.0), std::invalid_argument);
}

TEST_CASE("alpha parameter")
{
    const auto s = QubitLindbladSpec::make(1.0, 0.25, 2.0, 0.0, 300.0);
    CHECK(s.alpha.real() == doctest::Approx(2046.7454406271113).epsilon(1e-12));
    CHECK(s.alpha.imag() == 0.0);
    const auto free = QubitLindbladSpec::make(1.5, 0.0, 1.0, 0.0, 1.0);
    CHECK(free.alpha.real() == 0.0);
    CHECK(free.alpha.imag() == doctest::Approx(1.5));
}

TEST_CASE("closed form against scipy integration")
{
    const Eigen::Matrix2cd rho0 = coherent_rho(kPi / 4, kPi / 4);

    const auto hot = QubitLindbladSpec::make(1.0, 0.025, 1.0, kPi / 8, 300.0);
    const Eigen::Matrix2cd a = propagate_qubit(rho0, hot, 1.0);
    CHECK(a(0, 0).real() == doctest::Approx(0.5002215016525494).epsilon(1e-10));
    CHECK(a(1, 1).real() == doctest::Approx(0.49977849834745064).epsilon(1e-10));
    CHECK(std::abs(a(0, 1) - C(0.06692373780654877, -0.012037367441073282)) < 1e-10);

    const auto cold = QubitLindbladSpec::make(1.0, 0.1, 0.5, kPi / 8, 0.0);
    const Eigen::Matrix2cd b = propagate_qubit(rho0, cold, 2.0);
    CHECK(b(0, 0).real() == doctest::Approx(0.8457130676009322).epsilon(1e-11));
    CHECK(b(1, 1).real() == doctest::Approx(0.15428693239906774).epsilon(1e-11));
    CHECK(std::abs(b(0, 1) - C(-0.27773410775980517, 0.09197049571774565)) < 1e-11);
}

TEST_CASE("identity at t = 0")
{
    const Eigen::Matrix2cd rho0 = coherent_rho(1.0, 2.0);
    const auto s = QubitLindbladSpec::make(1.0, 0.3, 1.2, 0.7, 5.0);
    CHECK((propagate_qubit(rho0, s, 0.0) - rho0).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THROWS_AS(propagate_qubit(rho0, s, -1.0), std::invalid_argument);
}

TEST_CASE("amplitude damping in the vacuum")
{
    const double gamma0 = 0.2;
    const auto s = QubitLindbladSpec::make(1.0, gamma0, 0.0, 0.0, 0.0);
    const AtomicCoherentParams start{2.0, 0.5};
    const double p0 = std::pow(std::sin(1.0), 2);
    for (double t : {0.0, 0.5, 3.0, 17.0}) {
        CHECK(excited_population(start, s, t) == doctest::Approx(p0 * std::exp(-gamma0 * t)));
        const Eigen::Matrix2cd rho = propagate_qubit(coherent_rho(2.0, 0.5), s, t);
        CHECK(rho(1, 1).real() == doctest::Approx(p0 * std::exp(-gamma0 * t)));
        CHECK(std::abs(rho(0, 1)) == doctest::Approx(std::sin(1.0) * std::cos(1.0) * std::exp(-gamma0 * t / 2)));
    }
}

TEST_CASE("trace, hermiticity and positivity over long times")
{
    const Eigen::Matrix2cd rho0 = coherent_rho(kPi / 3, 1.0);
    for (double r : {-1.0, 0.0, 0.5, 2.0}) {
        for (double T : {0.0, 300.0}) {
            const auto s = QubitLindbladSpec::make(1.0, 0.025, r, kPi / 8, T);
            for (double t = 0.0; t <= 250.0; t += 2.5) {
                const Eigen::Matrix2cd rho = propagate_qubit(rho0, s, t);
                CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
                CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
                CHECK(min_eigenvalue(rho) > -1e-12);
            }
        }
    }
}

TEST_CASE("excited population agrees with the propagated state and relaxes to N/(2N+1)")
{
    const AtomicCoherentParams start{kPi / 4, kPi / 4};
    const auto s = QubitLindbladSpec::make(1.0, 0.05, 0.8, 0.2, 1.5);
    for (double t : {0.1, 1.0, 10.0}) {
        const Eigen::Matrix2cd rho = propagate_qubit(coherent_rho(start.alpha_p, start.beta_p), s, t);
        CHECK(excited_population(start, s, t) == doctest::Approx(rho(1, 1).real()).epsilon(1e-13));
        CHECK(1.0 - excited_population(start, s, t) == doctest::Approx(rho(0, 0).real()).epsilon(1e-13));
    }
    const double n = s.moments.N;
    CHECK(excited_population(start, s, 2000.0) == doctest::Approx(n / (2 * n + 1)).epsilon(1e-12));
}

TEST_CASE("propagator map equals the term-by-term form")
{
    const auto s = QubitLindbladSpec::make(1.3, 0.4, 0.9, -0.6, 3.0);
    const Eigen::Matrix2cd rho0 = coherent_rho(0.7, 2.5);
    for (double t : {0.0, 0.3, 4.0}) {
        const QubitPropagator prop(s, t);
        CHECK((prop.apply(rho0) - propagate_qubit(rho0, s, t)).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(prop.bloch_map()(0, 0) == doctest::Approx(1.0));
    }
}

TEST_CASE("alpha = 0 is a removable point")
{
    // gamma0 |M| = omega exactly
    const auto base = bath_moments(1.0, 0.0, 0.0, 1.0, MomentConvention::Qubit);
    const double gamma0 = 1.0 / base.abs_M();
    const auto s = QubitLindbladSpec::from_moments(1.0, gamma0, base);
    CHECK(std::abs(s.alpha) < 1e-7);
    const auto near = QubitLindbladSpec::from_moments(1.0, gamma0 * (1 + 1e-9), base);
    for (double t : {0.1, 1.0, 3.0}) {
        const HyperbolicFactors a = hyperbolic_factors(s, t);
        const HyperbolicFactors b = hyperbolic_factors(near, t);
        CHECK(std::isfinite(a.sinh_over_alpha));
        CHECK(a.sinh_over_alpha == doctest::Approx(b.sinh_over_alpha).epsilon(1e-6));
        CHECK(a.cosh_term == doctest::Approx(b.cosh_term).epsilon(1e-6));
    }
}

TEST_CASE("without coupling the qubit only rotates")
{
    const PhaseGrid grid(360);
    const AtomicCoherentParams start{kPi / 4, kPi / 4};
    const auto s = QubitLindbladSpec::make(1.0, 0.0, 1.0, 0.3, 300.0);
    const double t = 1.7;
    const auto closed = phase_dist_qubit_coherent(start, s, t, grid);
    const auto unitary = phase_dist_coherent_halfspin(start, 1.0, t, 0.0, grid);
    for (int k = 0; k < grid.count; ++k) {
        CHECK(closed.values[static_cast<std::size_t>(k)] ==
              doctest::Approx(unitary.values[static_cast<std::size_t>(k)]).epsilon(1e-13));
    }
}

TEST_CASE("qubit phase distributions match the general pipeline")
{
    const PhaseGrid grid(360);
    const auto s = QubitLindbladSpec::make(1.0, 0.1, 1.0, kPi / 8, 2.0);
    const double t = 3.0;
    const AtomicCoherentParams start{kPi / 4, kPi / 4};
    const Eigen::Matrix2cd rho = propagate_qubit(coherent_rho(start.alpha_p, start.beta_p), s, t);
    const auto pipeline = phase_distribution_atomic(DickeDensityMatrix(HalfInteger::from_twice(1), rho), grid);
    const auto closed = phase_dist_qubit_coherent(start, s, t, grid);
    CHECK(integrate_distribution(closed) == doctest::Approx(1.0).epsilon(1e-13));
    for (int k = 0; k < grid.count; ++k) {
        CHECK(closed.values[static_cast<std::size_t>(k)] ==
              doctest::Approx(pipeline.values[static_cast<std::size_t>(k)]).epsilon(1e-12));
    }

    for (int sign : {1, -1}) {
        const auto sq0 = atomic_squeezed_density({HalfInteger::from_twice(1), HalfInteger::from_twice(sign), 0.4});
        const Eigen::Matrix2cd rs = propagate_qubit(sq0.elements, s, t);
        const auto pipe = phase_distribution_atomic(DickeDensityMatrix(HalfInteger::from_twice(1), rs), grid);
        const auto form = phase_dist_qubit_squeezed(0.4, sign, s, t, grid);
        for (int k = 0; k < grid.count; k += 7) {
            CHECK(form.values[static_cast<std::size_t>(k)] ==
                  doctest::Approx(pipe.values[static_cast<std::size_t>(k)]).epsilon(1e-12));
        }
    }
}

TEST_CASE("dispersion grows towards the mixed state")
{
    const PhaseGrid grid(720);
    const auto s = QubitLindbladSpec::make(1.0, 0.025, 0.0, 0.0, 0.0);
    const AtomicCoherentParams start{kPi / 2, 0.0};
    double last = 0.0;
    for (double t : {0.0, 10.0, 50.0, 150.0, 250.0}) {
        const double d = dispersion(phase_dist_qubit_coherent(start, s, t, grid));
        CHECK(d > last);
        CHECK(d <= 1.0);
        last = d;
    }
}
