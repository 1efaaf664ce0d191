#include "phasediff/dissipative_qubit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phasediff {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesThreshold = 1e-4;

using Mat2 = Eigen::Matrix2cd;

Mat2 sigma_x()
{
    return sigma_plus() + sigma_minus();
}

Mat2 sigma_y()
{
    return std::complex<double>(0.0, -1.0) * (sigma_plus() - sigma_minus());
}

std::array<Mat2, 4> pauli_basis()
{
    return {Mat2::Identity(), sigma_x(), sigma_y(), sigma_z()};
}

// Rates divided by gamma_beta depend only on N, so gamma0 -> 0 is regular.
double ratio_gamma0(const QubitLindbladSpec& s) { return 1.0 / (2.0 * s.moments.N + 1.0); }
double ratio_gamma_plus(const QubitLindbladSpec& s) { return (s.moments.N + 1.0) / (2.0 * s.moments.N + 1.0); }
double ratio_gamma_minus(const QubitLindbladSpec& s) { return s.moments.N / (2.0 * s.moments.N + 1.0); }

} // namespace

Eigen::Matrix2cd sigma_plus()
{
    Mat2 s = Mat2::Zero();
    s(1, 0) = 1.0;
    return s;
}

Eigen::Matrix2cd sigma_minus()
{
    Mat2 s = Mat2::Zero();
    s(0, 1) = 1.0;
    return s;
}

Eigen::Matrix2cd sigma_z()
{
    Mat2 s = Mat2::Zero();
    s(0, 0) = -1.0;
    s(1, 1) = 1.0;
    return s;
}

QubitLindbladSpec QubitLindbladSpec::from_moments(double omega, double gamma0, const DissipativeBathMoments& moments)
{
    if (!(omega > 0.0)) {
        throw std::invalid_argument("QubitLindbladSpec: omega must be positive");
    }
    if (gamma0 < 0.0) {
        throw std::invalid_argument("QubitLindbladSpec: gamma0 must be nonnegative");
    }
    QubitLindbladSpec s;
    s.omega = omega;
    s.gamma0 = gamma0;
    s.moments = moments;
    s.gamma_plus = gamma0 * (moments.N + 1.0);
    s.gamma_minus = gamma0 * moments.N;
    s.gamma_beta = gamma0 * (2.0 * moments.N + 1.0);
    s.alpha = alpha_param(s);
    return s;
}

QubitLindbladSpec QubitLindbladSpec::make(double omega, double gamma0, double r, double Phi, double T)
{
    return from_moments(omega, gamma0, bath_moments(r, Phi, T, omega, MomentConvention::Qubit));
}

std::complex<double> alpha_param(const QubitLindbladSpec& spec)
{
    const double m = spec.moments.abs_M();
    return std::sqrt(std::complex<double>(spec.gamma0 * spec.gamma0 * m * m - spec.omega * spec.omega, 0.0));
}

HyperbolicFactors hyperbolic_factors(const QubitLindbladSpec& spec, double t)
{
    const std::complex<double> a = spec.alpha;
    const double g = 0.5 * spec.gamma_beta;
    HyperbolicFactors f;
    const std::complex<double> up = std::exp((a - g) * t);
    const std::complex<double> down = std::exp((-a - g) * t);
    f.cosh_term = (0.5 * (up + down)).real();
    const std::complex<double> at = a * t;
    if (std::abs(at) < kSeriesThreshold) {
        f.sinh_over_alpha = (t * (1.0 + at * at / 6.0)).real() * std::exp(-g * t);
    } else {
        f.sinh_over_alpha = ((up - down) / (2.0 * a)).real();
    }
    return f;
}

Eigen::Matrix2cd propagate_qubit(const Eigen::Matrix2cd& rho0, const QubitLindbladSpec& spec, double t)
{
    if (t < 0.0) {
        throw std::invalid_argument("propagate_qubit: t must be nonnegative");
    }
    const HyperbolicFactors h = hyperbolic_factors(spec, t);
    const double e = std::exp(-spec.gamma_beta * t);
    const double relax = ratio_gamma0(spec) * (1.0 - e);
    const std::complex<double> rot(0.0, 2.0 * spec.omega * h.sinh_over_alpha);
    const Mat2 sz = sigma_z();
    const Mat2 sp = sigma_plus();
    const Mat2 sm = sigma_minus();
    const std::complex<double> m = spec.moments.M;

    Mat2 out = 0.25 * rho0 * (1.0 + e + 2.0 * h.cosh_term);
    out += 0.25 * sz * rho0 * sz * (1.0 + e - 2.0 * h.cosh_term);
    out -= 0.25 * rho0 * sz * (relax - rot);
    out -= 0.25 * sz * rho0 * (relax + rot);
    out += (1.0 - e) * (ratio_gamma_plus(spec) * sm * rho0 * sp + ratio_gamma_minus(spec) * sp * rho0 * sm);
    out -= spec.gamma0 * h.sinh_over_alpha * (m * sp * rho0 * sp + std::conj(m) * sm * rho0 * sm);
    return out;
}

QubitPropagator::QubitPropagator(const QubitLindbladSpec& spec, double t)
{
    const auto basis = pauli_basis();
    for (int b = 0; b < 4; ++b) {
        const Mat2 image = propagate_qubit(basis[static_cast<std::size_t>(b)], spec, t);
        for (int a = 0; a < 4; ++a) {
            map_(a, b) = 0.5 * (basis[static_cast<std::size_t>(a)] * image).trace().real();
        }
    }
}

Eigen::Matrix2cd QubitPropagator::apply(const Eigen::Matrix2cd& rho0) const
{
    const auto basis = pauli_basis();
    Eigen::Vector4d v;
    for (int a = 0; a < 4; ++a) {
        v(a) = (basis[static_cast<std::size_t>(a)] * rho0).trace().real();
    }
    const Eigen::Vector4d w = map_ * v;
    Mat2 out = Mat2::Zero();
    for (int a = 0; a < 4; ++a) {
        out += 0.5 * w(a) * basis[static_cast<std::size_t>(a)];
    }
    return out;
}

PhaseDistribution phase_dist_qubit_coherent(const AtomicCoherentParams& params, const QubitLindbladSpec& spec,
                                            double t, const PhaseGrid& grid)
{
    const HyperbolicFactors h = hyperbolic_factors(spec, t);
    const double pre = (kPi / 4.0) * std::sin(params.alpha_p);
    const double gr = spec.gamma0 * spec.moments.R;
    const double Phi = spec.moments.Phi;
    const double bp = params.beta_p;
    return tabulate(grid, [&](double phi) {
        const double braces = h.cosh_term * std::cos(phi - bp) + spec.omega * h.sinh_over_alpha * std::sin(phi - bp) -
                              gr * h.sinh_over_alpha * std::cos(Phi + bp + phi);
        return (1.0 + pre * braces) / (2.0 * kPi);
    });
}

PhaseDistribution phase_dist_qubit_squeezed(double Theta, int p_sign, const QubitLindbladSpec& spec, double t,
                                            const PhaseGrid& grid)
{
    if (p_sign != 1 && p_sign != -1) {
        throw std::invalid_argument("phase_dist_qubit_squeezed: p_sign must be +1 or -1");
    }
    const HyperbolicFactors h = hyperbolic_factors(spec, t);
    const double pre = p_sign * kPi / (4.0 * std::cosh(Theta));
    const double gr = spec.gamma0 * spec.moments.R;
    const double Phi = spec.moments.Phi;
    return tabulate(grid, [&](double phi) {
        const double braces = h.cosh_term * std::cos(phi) + spec.omega * h.sinh_over_alpha * std::sin(phi) -
                              gr * h.sinh_over_alpha * std::cos(phi + Phi);
        return (1.0 + pre * braces) / (2.0 * kPi);
    });
}

double excited_population(const AtomicCoherentParams& params, const QubitLindbladSpec& spec, double t)
{
    const double e = std::exp(-spec.gamma_beta * t);
    const double g = ratio_gamma0(spec);
    const double s = std::sin(params.alpha_p / 2.0);
    const double c = std::cos(params.alpha_p / 2.0);
    return 0.5 * ((1.0 - g) + (1.0 + g) * e) * s * s + ratio_gamma_minus(spec) * (1.0 - e) * c * c;
}

} // namespace phasediff
