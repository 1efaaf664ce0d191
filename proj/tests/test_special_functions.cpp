#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "phasediff/special_functions.hpp"

using namespace phasediff;
using namespace phasediff::special;

namespace {
constexpr HalfInteger half(int twice) { return HalfInteger::from_twice(twice); }
}

TEST_CASE("half-integer arithmetic")
{
    constexpr HalfInteger a = half(5);
    CHECK(a.value() == 2.5);
    CHECK_FALSE(a.is_integer());
    CHECK((a + half(1)).is_integer());
    CHECK(as_integer(a + half(1)) == 3);
    CHECK((-a).twice == -5);
    CHECK(half(3) < half(5));
    CHECK_THROWS_AS(as_integer(a), std::invalid_argument);
}

TEST_CASE("spin pairs are checked")
{
    CHECK_NOTHROW(check_spin_pair(half(5), half(-3)));
    CHECK_THROWS_AS(check_spin_pair(half(5), half(7)), std::invalid_argument);
    CHECK_THROWS_AS(check_spin_pair(half(5), half(2)), std::invalid_argument);
    CHECK_THROWS_AS(check_spin_pair(half(-1), half(-1)), std::invalid_argument);
}

TEST_CASE("log factorial and binomial")
{
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(10) == doctest::Approx(15.104412573075516).epsilon(1e-15));
    CHECK(std::exp(log_binomial(10, 3)) == doctest::Approx(120.0).epsilon(1e-13));
    CHECK(log_binomial(7, 0) == doctest::Approx(0.0));
    CHECK_THROWS(log_factorial(-1));
    CHECK_THROWS(log_binomial(3, 4));
}

TEST_CASE("wigner d at pi/2 against matrix exponential values")
{
    CHECK(wigner_d_half_pi(half(10), half(6), half(10)) == doctest::Approx(0.2096313728906052).epsilon(1e-12));
    CHECK(wigner_d_half_pi(half(1), half(1), half(1)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("wigner d matrix is orthogonal with the symmetry d_{n,p} = (-1)^{n-p} d_{p,n}")
{
    for (int twice_j = 1; twice_j <= 20; ++twice_j) {
        const Eigen::MatrixXd d = wigner_d_half_pi_matrix(half(twice_j));
        const auto dim = static_cast<Eigen::Index>(twice_j + 1);
        CHECK((d * d.transpose() - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-12);
        for (Eigen::Index a = 0; a < dim; ++a) {
            for (Eigen::Index b = 0; b < dim; ++b) {
                const double sign = ((a - b) % 2 == 0) ? 1.0 : -1.0;
                CHECK(d(a, b) == doctest::Approx(sign * d(b, a)).epsilon(1e-12).scale(1.0));
            }
        }
    }
}

TEST_CASE("generalized laguerre")
{
    CHECK(generalized_laguerre(0, 3, 1.7) == 1.0);
    CHECK(generalized_laguerre(1, 2, 0.5) == doctest::Approx(2.5));
    CHECK(generalized_laguerre(2, 0, 0.7) == doctest::Approx(1.0 - 1.4 + 0.245));
    CHECK(generalized_laguerre(2, -1, 0.7) == doctest::Approx(-0.455).epsilon(1e-14));
    CHECK_THROWS(generalized_laguerre(2, -3, 0.7));
}

TEST_CASE("complex hermite")
{
    const Complex h = hermite_complex(3, Complex(1.0, 1.0));
    CHECK(h.real() == doctest::Approx(-28.0));
    CHECK(h.imag() == doctest::Approx(4.0));
    CHECK(hermite_complex(0, Complex(3.0, -2.0)) == Complex(1.0, 0.0));
    CHECK(hermite_complex(1, Complex(3.0, -2.0)) == Complex(6.0, -4.0));
}

TEST_CASE("terminating 2F1")
{
    CHECK(gauss_2f1_terminating(0, 5, 1.5, 0.3) == 1.0);
    // 1 + (-1)(-2)/c x
    CHECK(gauss_2f1_terminating(1, 2, 4.0, 0.5) == doctest::Approx(1.0 + 2.0 / 4.0 * 0.5));
    CHECK(gauss_2f1_terminating(2, 3, 1.0, 0.2) == gauss_2f1_terminating(3, 2, 1.0, 0.2));
}

TEST_CASE("squeeze matrix elements")
{
    CHECK(squeeze_matrix_element(2, 0, 1.0, 0.0).real() == doctest::Approx(-0.4335251473396548).epsilon(1e-12));
    CHECK(squeeze_matrix_element(0, 0, 1.0, 0.3).real() == doctest::Approx(1.0 / std::sqrt(std::cosh(1.0))));
    CHECK(squeeze_matrix_element(4, 4, 0.0, 1.2) == Complex(1.0, 0.0));
    CHECK(squeeze_matrix_element(3, 1, 0.0, 1.2) == Complex(0.0, 0.0));

    SUBCASE("opposite parity is exactly zero")
    {
        const Eigen::MatrixXcd g = squeeze_matrix(12, 12, 0.8, 0.4);
        for (int m = 0; m < 12; ++m) {
            for (int n = 0; n < 12; ++n) {
                if ((m + n) % 2 != 0) {
                    CHECK(g(m, n) == Complex(0.0, 0.0));
                }
            }
        }
    }
    SUBCASE("negative r1 is the phase shifted by pi")
    {
        const Complex a = squeeze_matrix_element(4, 2, -0.6, 0.3);
        const Complex b = squeeze_matrix_element(4, 2, 0.6, 0.3 + std::numbers::pi);
        CHECK(std::abs(a - b) < 1e-14);
    }
    SUBCASE("block agrees with single elements")
    {
        const Eigen::MatrixXcd g = squeeze_matrix(6, 9, 0.5, -0.7);
        CHECK(std::abs(g(5, 7) - squeeze_matrix_element(5, 7, 0.5, -0.7)) < 1e-14);
    }
}

TEST_CASE("beta integral")
{
    CHECK(beta_integral(3.5, 2.5) == doctest::Approx(0.036815538909255389513).epsilon(1e-14));
    CHECK(beta_integral(1.0, 1.0) == doctest::Approx(1.0));
    CHECK(beta_integral(2.0, 3.0) == doctest::Approx(beta_integral(3.0, 2.0)));
    CHECK_THROWS(beta_integral(0.0, 1.0));
}
