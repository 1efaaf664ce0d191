#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "phasediff/bath_kernels.hpp"
#include "phasediff/dissipative_oscillator.hpp"
#include "phasediff/dissipative_qubit.hpp"
#include "phasediff/errors.hpp"
#include "phasediff/oracle.hpp"

using namespace phasediff;
using namespace phasediff::oracle;

namespace {
constexpr double kPi = std::numbers::pi;
using C = std::complex<double>;

Eigen::Matrix2cd excited()
{
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    rho(1, 1) = 1.0;
    return rho;
}

Eigen::Matrix2cd plus_state()
{
    return Eigen::Matrix2cd::Constant(C(0.5, 0.0));
}
}

TEST_CASE("ode config validation")
{
    OdeConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.abs_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    const auto s = QubitLindbladSpec::make(1.0, 0.1, 0.0, 0.0, 0.0);
    CHECK_THROWS_AS(integrate_lindblad_qubit(excited(), s, -1.0), std::invalid_argument);
}

TEST_CASE("qubit ODE decays an excited atom at rate gamma0")
{
    const auto s = QubitLindbladSpec::make(1.0, 0.3, 0.0, 0.0, 0.0);
    for (double t : {0.5, 2.0, 7.0}) {
        const Eigen::Matrix2cd rho = integrate_lindblad_qubit(excited(), s, t);
        CHECK(rho(1, 1).real() == doctest::Approx(std::exp(-0.3 * t)).epsilon(1e-10));
    }
}

TEST_CASE("qubit ODE precesses at omega without coupling")
{
    const auto s = QubitLindbladSpec::make(2.0, 0.0, 0.0, 0.0, 0.0);
    const Eigen::Matrix2cd rho = integrate_lindblad_qubit(plus_state(), s, 1.3);
    // rho_01(t) = rho_01(0) e^{i omega t} in this basis
    CHECK(std::abs(rho(0, 1) - 0.5 * std::polar(1.0, 2.0 * 1.3)) < 1e-10);
}

TEST_CASE("fixed step RK4 is fourth order")
{
    const auto s = QubitLindbladSpec::make(1.0, 0.5, 0.7, 0.3, 1.0);
    const Eigen::Matrix2cd exact = propagate_qubit(plus_state(), s, 2.0);
    OdeConfig coarse;
    coarse.method = OdeConfig::Method::FixedRk4;
    coarse.fixed_step = 0.1;
    OdeConfig fine = coarse;
    fine.fixed_step = 0.05;
    const double e1 = (integrate_lindblad_qubit(plus_state(), s, 2.0, coarse) - exact).cwiseAbs().maxCoeff();
    const double e2 = (integrate_lindblad_qubit(plus_state(), s, 2.0, fine) - exact).cwiseAbs().maxCoeff();
    const double ratio = e1 / e2;
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("oscillator ODE conserves trace and thermalizes")
{
    const int dim = 30;
    Eigen::MatrixXcd rho0 = Eigen::MatrixXcd::Zero(dim, dim);
    rho0(2, 2) = 1.0;
    const auto s = OscillatorLindbladSpec::make(1.0, 0.5, 0.0, 0.0, 1.0);
    const Eigen::MatrixXcd rho = integrate_lindblad_oscillator(rho0, s, 1.0);
    CHECK(std::abs(rho.trace() - 1.0) < 1e-9);

    const Eigen::MatrixXcd late = integrate_lindblad_oscillator(rho0, s, 40.0);
    const double nth = planck_occupation(1.0, 1.0);
    double mean_n = 0.0;
    for (int n = 0; n < dim; ++n) {
        mean_n += n * late(n, n).real();
    }
    CHECK(mean_n == doctest::Approx(nth).epsilon(1e-5));
}

TEST_CASE("oscillator ODE reports leakage")
{
    const int dim = 6;
    Eigen::MatrixXcd rho0 = Eigen::MatrixXcd::Zero(dim, dim);
    rho0(4, 4) = 1.0;
    const auto s = OscillatorLindbladSpec::make(1.0, 0.5, 0.0, 0.0, 5.0);
    CHECK_THROWS_AS(integrate_lindblad_oscillator(rho0, s, 5.0), TruncationError);
}

TEST_CASE("oscillator ODE follows the mixture solution")
{
    const int dim = 40;
    const C eta0(1.0, 0.0);
    const auto s = OscillatorLindbladSpec::make(1.0, 0.025, 0.5, 0.0, 0.0);
    const Eigen::MatrixXcd rho0 = squeezed_coherent_density_expm(0.5, 0.0, eta0, dim, 160);
    const Eigen::MatrixXcd ode = integrate_lindblad_oscillator(rho0, s, 2.0, {}, 1e-6);
    OscillatorCutoffs cut;
    cut.fock = 120;
    const Eigen::MatrixXcd closed = fock_density_from_gscs(mixture_params(s, 2.0, eta0), cut);
    CHECK(trace_distance(ode, closed.topLeftCorner(dim, dim)) < 1e-6);
}

TEST_CASE("gamma quadrature reproduces the vacuum closed form")
{
    QndBathSpec spec;
    spec.gamma0 = 0.1;
    spec.omega_c = 20.0;
    for (double t : {0.1, 1.0, 4.0}) {
        CHECK(gamma_by_quadrature(t, spec) ==
              doctest::Approx(0.1 / (2.0 * kPi) * std::log1p(400.0 * t * t)).epsilon(1e-10));
    }
    CHECK(gamma_by_quadrature(0.0, spec) == 0.0);
}

TEST_CASE("quadrature phase distribution of a Dicke state is uniform")
{
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(5, 5);
    rho(1, 1) = 1.0;
    const auto p = phase_dist_by_quadrature(DickeDensityMatrix(HalfInteger::from_twice(4), rho), PhaseGrid(24));
    for (double v : p.values) {
        CHECK(v == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-12));
    }
}

TEST_CASE("matrix exponential references")
{
    const Eigen::MatrixXd d = wigner_d_half_pi_expm(HalfInteger::from_twice(1));
    CHECK(std::abs(d(0, 0)) == doctest::Approx(std::sqrt(0.5)));
    const Eigen::MatrixXcd sq = squeeze_operator_expm(0.4, 0.0, 30);
    CHECK((sq * sq.adjoint() - Eigen::MatrixXcd::Identity(30, 30)).cwiseAbs().maxCoeff() < 1e-12);
    const Eigen::MatrixXcd vac = squeezed_coherent_density_expm(0.0, 0.0, C(0.0, 0.0), 5);
    CHECK(vac(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("trace distance")
{
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(2, 2);
    a(0, 0) = 1.0;
    b(1, 1) = 1.0;
    CHECK(trace_distance(a, b) == doctest::Approx(1.0));
    CHECK(trace_distance(a, a) == 0.0);
}
