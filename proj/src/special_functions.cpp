#include "phasediff/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace phasediff {

int as_integer(HalfInteger h)
{
    if (!h.is_integer()) {
        throw std::invalid_argument("expected an integer, got half-integer " + std::to_string(h.twice) + "/2");
    }
    return h.twice / 2;
}

void check_spin_pair(HalfInteger j, HalfInteger m)
{
    if (j.twice < 0) {
        throw std::invalid_argument("spin j must be nonnegative");
    }
    if (std::abs(m.twice) > j.twice || (j.twice - m.twice) % 2 != 0) {
        throw std::invalid_argument("invalid (j, m) pair: 2j=" + std::to_string(j.twice) +
                                    ", 2m=" + std::to_string(m.twice));
    }
}

namespace special {

using Quad = boost::multiprecision::cpp_bin_float_quad;

namespace {

constexpr int kFactorialTableSize = 4096;

const std::vector<double>& log_factorial_table()
{
    static const std::vector<double> table = [] {
        std::vector<double> t(kFactorialTableSize, 0.0);
        for (int n = 2; n < kFactorialTableSize; ++n) {
            t[n] = boost::math::lgamma(static_cast<double>(n) + 1.0);
        }
        return t;
    }();
    return table;
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

Quad terminating_2f1_quad(int p, int m, double c, double x)
{
    if (p < 0 || m < 0) {
        throw std::invalid_argument("gauss_2f1_terminating: p and m must be nonnegative");
    }
    if (c <= 0.0 && c == std::floor(c)) {
        throw std::invalid_argument("gauss_2f1_terminating: c must not be a nonpositive integer");
    }
    const int terms = std::min(p, m);
    const Quad xq = x;
    const Quad cq = c;
    Quad term = 1;
    Quad sum = 1;
    for (int k = 0; k < terms; ++k) {
        term *= Quad(k - p) * Quad(k - m) * xq / ((cq + k) * Quad(k + 1));
        sum += term;
    }
    return sum;
}

} // namespace

double log_factorial(int n)
{
    if (n < 0) {
        throw std::invalid_argument("log_factorial: negative argument");
    }
    if (n < kFactorialTableSize) {
        return log_factorial_table()[n];
    }
    return boost::math::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k)
{
    if (k < 0 || k > n) {
        throw std::invalid_argument("log_binomial: k outside [0, n]");
    }
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double wigner_d_half_pi(HalfInteger j, HalfInteger n, HalfInteger p)
{
    check_spin_pair(j, n);
    check_spin_pair(j, p);

    const int jpn = as_integer(j + n);
    const int jmn = as_integer(j - n);
    const int jpp = as_integer(j + p);
    const int jmp = as_integer(j - p);
    const int pmn = as_integer(p - n);

    const double log_root = 0.5 * (log_factorial(jpn) + log_factorial(jmn) +
                                   log_factorial(jpp) + log_factorial(jmp));
    const double log_scale = log_root - j.value() * std::numbers::ln2;

    // Every factorial argument q, j+n-q, j-p-q, p+q-n must be nonnegative.
    const int q_lo = std::max(0, -pmn);
    const int q_hi = std::min(jpn, jmp);

    CompensatedSum sum;
    for (int q = q_lo; q <= q_hi; ++q) {
        const double log_term = log_scale - log_factorial(q) - log_factorial(jpn - q) -
                                log_factorial(jmp - q) - log_factorial(pmn + q);
        const double magnitude = std::exp(log_term);
        sum.add(q % 2 == 0 ? magnitude : -magnitude);
    }
    return sum.value();
}

Eigen::MatrixXd wigner_d_half_pi_matrix(HalfInteger j)
{
    const int dim = j.twice + 1;
    Eigen::MatrixXd d(dim, dim);
    for (int row = 0; row < dim; ++row) {
        for (int col = 0; col < dim; ++col) {
            d(row, col) = wigner_d_half_pi(j, HalfInteger::from_twice(2 * row - j.twice),
                                           HalfInteger::from_twice(2 * col - j.twice));
        }
    }
    return d;
}

double generalized_laguerre(int n, int a, double x)
{
    if (n < 0) {
        throw std::invalid_argument("generalized_laguerre: negative degree");
    }
    if (a < -n) {
        throw std::invalid_argument("generalized_laguerre: superscript below -n");
    }
    if (a < 0) {
        const int k = -a;
        const double ratio = std::exp(log_factorial(n - k) - log_factorial(n));
        return std::pow(-x, k) * ratio * generalized_laguerre(n - k, k, x);
    }
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double curr = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + a - x) * curr - (k + a) * prev) / (k + 1.0);
        prev = curr;
        curr = next;
    }
    return curr;
}

Complex hermite_complex(int m, Complex z)
{
    if (m < 0) {
        throw std::invalid_argument("hermite_complex: negative degree");
    }
    Complex prev{1.0, 0.0};
    if (m == 0) {
        return prev;
    }
    Complex curr = 2.0 * z;
    for (int k = 1; k < m; ++k) {
        const Complex next = 2.0 * z * curr - 2.0 * static_cast<double>(k) * prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

double gauss_2f1_terminating(int p, int m, double c, double x)
{
    return static_cast<double>(terminating_2f1_quad(p, m, c, x));
}

Complex squeeze_matrix_element(int m, int n, double r1, double phi)
{
    if (m < 0 || n < 0) {
        throw std::invalid_argument("squeeze_matrix_element: negative Fock index");
    }
    if (r1 < 0.0) {
        r1 = -r1;
        phi += std::numbers::pi;
    }
    if (r1 == 0.0) {
        return m == n ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    }
    if ((m - n) % 2 != 0) {
        return {0.0, 0.0};
    }

    // The tabulated element is that of exp((zeta a^+2 - zeta* a^2)/2); shifting
    // the squeeze angle by pi maps it onto S(zeta) as defined above.
    const double angle = phi + std::numbers::pi;

    const bool odd = (m % 2) != 0;
    const int mh = m / 2;
    const int ph = n / 2;
    const double c = odd ? 1.5 : 0.5;
    const double cosh_power = odd ? 3.0 : 1.0;
    const double sh = std::sinh(r1);

    const double log_prefactor = -log_factorial(ph) - log_factorial(mh) +
                                 0.5 * (log_factorial(n) + log_factorial(m) - cosh_power * std::log(std::cosh(r1))) +
                                 (mh + ph) * std::log(std::tanh(r1) / 2.0);

    const Quad series = terminating_2f1_quad(ph, mh, c, -1.0 / (sh * sh));
    Quad magnitude = boost::multiprecision::exp(Quad(log_prefactor)) * series;
    if (ph % 2 != 0) {
        magnitude = -magnitude;
    }
    return static_cast<double>(magnitude) * std::polar(1.0, (mh - ph) * angle);
}

Eigen::MatrixXcd squeeze_matrix(int rows, int cols, double r1, double phi)
{
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int k = (i % 2); k < cols; k += 2) {
            g(i, k) = squeeze_matrix_element(i, k, r1, phi);
        }
    }
    if (r1 == 0.0) {
        g.setZero();
        for (int i = 0; i < std::min(rows, cols); ++i) {
            g(i, i) = 1.0;
        }
    }
    return g;
}

double beta_integral(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("beta_integral: arguments must be positive");
    }
    return boost::math::beta(a, b);
}

} // namespace special
} // namespace phasediff
