// special_functions.hpp: combinatorial and special functions used by the
// closed-form phase distributions.
//
// Everything here is a pure function of its arguments.

#pragma once

#include <complex>
#include <compare>

#include <Eigen/Dense>

namespace phasediff {

using Complex = std::complex<double>;

// An integer or half-integer stored as twice its value, so spins such as 5/2
// and magnetic quantum numbers are exact.
struct HalfInteger {
    int twice = 0;

    static constexpr HalfInteger from_twice(int t) { return HalfInteger{t}; }
    static constexpr HalfInteger from_int(int v) { return HalfInteger{2 * v}; }

    constexpr double value() const { return 0.5 * twice; }
    constexpr bool is_integer() const { return twice % 2 == 0; }

    constexpr HalfInteger operator-() const { return {-twice}; }
    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return {a.twice + b.twice}; }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return {a.twice - b.twice}; }
    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
};

// Integer value of a HalfInteger known to be integral (e.g. j+m).
int as_integer(HalfInteger h);

// Throws std::invalid_argument unless j >= 0, |m| <= j and j-m is an integer.
void check_spin_pair(HalfInteger j, HalfInteger m);

namespace special {

// ln(n!) for n >= 0.
double log_factorial(int n);

// ln C(n, k) for 0 <= k <= n.
double log_binomial(int n, int k);

// d^j_{n,p}(pi/2) = <j,n| exp(-i (pi/2) J_y) |j,p>.
//
// Finite alternating sum over q, evaluated term by term in log space and
// accumulated with Neumaier compensation.
double wigner_d_half_pi(HalfInteger j, HalfInteger n, HalfInteger p);

// Full (2j+1)x(2j+1) rotation matrix; row/column index k <-> m = -j + k.
Eigen::MatrixXd wigner_d_half_pi_matrix(HalfInteger j);

// Generalized Laguerre polynomial L_n^a(x) for integer a >= -n.
// Negative superscripts go through L_n^{-k}(x) = (-x)^k (n-k)!/n! L_{n-k}^k(x).
double generalized_laguerre(int n, int a, double x);

// Physicists' Hermite polynomial H_m(z) by three-term recurrence.
Complex hermite_complex(int m, Complex z);

// 2F1(-p, -m; c; x): the terminating series of min(p, m) + 1 terms.
double gauss_2f1_terminating(int p, int m, double c, double x);

// G_{m,n}(zeta) = <m| S(zeta) |n>,  S(zeta) = exp( (zeta* a^2 - zeta a^+2) / 2 ),
// zeta = r1 e^{i phi}. Zero exactly when m and n have opposite parity;
// r1 == 0 returns the identity element.
Complex squeeze_matrix_element(int m, int n, double r1, double phi);

// rows x cols block of G, G(i, k) = <i| S(zeta) |k>.
Eigen::MatrixXcd squeeze_matrix(int rows, int cols, double r1, double phi);

// Euler Beta function B(a, b) for a, b > 0.
double beta_integral(double a, double b);

} // namespace special
} // namespace phasediff
