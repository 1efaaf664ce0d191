#include "phasediff/qnd_phase.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "phasediff/errors.hpp"

namespace phasediff {

namespace {

constexpr double kPi = std::numbers::pi;

DickeDensityMatrix pure_density(HalfInteger j, const Eigen::VectorXcd& amplitudes)
{
    return DickeDensityMatrix(j, amplitudes * amplitudes.adjoint());
}

Eigen::VectorXcd coherent_amplitudes(const AtomicCoherentParams& params, HalfInteger j)
{
    const int dim = j.twice + 1;
    const int two_j = j.twice;
    Eigen::VectorXcd c(dim);
    const double s = std::sin(params.alpha_p / 2.0);
    const double co = std::cos(params.alpha_p / 2.0);
    for (int k = 0; k < dim; ++k) {
        // k = j + m, 2j - k = j - m
        const double mag = std::exp(0.5 * special::log_binomial(two_j, k)) * std::pow(s, k) * std::pow(co, two_j - k);
        c(k) = mag * std::polar(1.0, -static_cast<double>(k) * params.beta_p);
    }
    return c;
}

Eigen::VectorXcd squeezed_amplitudes(const AtomicSqueezedParams& params)
{
    check_spin_pair(params.j, params.p);
    const int dim = params.j.twice + 1;
    Eigen::VectorXcd a(dim);
    for (int k = 0; k < dim; ++k) {
        const HalfInteger n = HalfInteger::from_twice(2 * k - params.j.twice);
        a(k) = std::exp(n.value() * params.Theta) * special::wigner_d_half_pi(params.j, n, params.p);
    }
    return a / a.norm();
}

// (-i w (m-n) t) + i w^2 (m-n)(m+n+1) eta - w^2 (m-n)^2 gamma, for Fock indices.
std::complex<double> fock_qnd_factor(int m, int n, double omega, double t, double eta_t, double gamma_t)
{
    const double d = static_cast<double>(m - n);
    const double w2 = omega * omega;
    const double phase = -omega * d * t + w2 * d * static_cast<double>(m + n + 1) * eta_t;
    return std::exp(-w2 * d * d * gamma_t) * std::polar(1.0, phase);
}

Eigen::MatrixXcd dephased_outer(const Eigen::VectorXcd& a, double omega, double t, double eta_t, double gamma_t)
{
    const int n = static_cast<int>(a.size());
    Eigen::MatrixXcd rho(n, n);
    for (int m = 0; m < n; ++m) {
        for (int k = 0; k < n; ++k) {
            rho(m, k) = a(m) * std::conj(a(k)) * fock_qnd_factor(m, k, omega, t, eta_t, gamma_t);
        }
    }
    return rho;
}

void check_cutoff(const FockTruncation& trunc, double tail, const char* what)
{
    if (trunc.cutoff < 1) {
        throw std::invalid_argument("Fock cutoff must be positive");
    }
    if (tail > trunc.tail_tolerance) {
        throw TruncationError(std::string(what) + ": Fock cutoff too small", trunc.cutoff, tail);
    }
}

} // namespace

double theta_from_zeta(double zeta)
{
    if (!(zeta > 0.0)) {
        throw std::invalid_argument("theta_from_zeta: zeta must be positive");
    }
    return 0.5 * std::log(std::tanh(2.0 * zeta));
}

DickeDensityMatrix::DickeDensityMatrix(HalfInteger spin, Eigen::MatrixXcd rho) : j(spin), elements(std::move(rho))
{
    if (j.twice < 0 || elements.rows() != j.twice + 1 || elements.cols() != j.twice + 1) {
        throw std::invalid_argument("DickeDensityMatrix: matrix size must be (2j+1) x (2j+1)");
    }
}

void DickeDensityMatrix::validate(double hermitian_tol, double trace_tol, double psd_tol) const
{
    const double herm = (elements - elements.adjoint()).cwiseAbs().maxCoeff();
    if (herm > hermitian_tol) {
        throw ConsistencyError("density matrix not Hermitian: " + std::to_string(herm));
    }
    const double tr_err = std::abs(elements.trace() - std::complex<double>(1.0, 0.0));
    if (tr_err > trace_tol) {
        throw ConsistencyError("density matrix trace deviates from 1 by " + std::to_string(tr_err));
    }
    const Eigen::MatrixXcd h = 0.5 * (elements + elements.adjoint());
    const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h).eigenvalues().minCoeff();
    if (min_eig < -psd_tol) {
        throw ConsistencyError("density matrix has negative eigenvalue " + std::to_string(min_eig));
    }
}

DickeDensityMatrix qnd_evolve(const DickeDensityMatrix& rho0, double omega, double t, double eta_t, double gamma_t)
{
    DickeDensityMatrix out = rho0;
    const int dim = rho0.dim();
    const double w2 = omega * omega;
    for (int a = 0; a < dim; ++a) {
        const double m = 0.5 * (2 * a - rho0.j.twice);
        for (int b = 0; b < dim; ++b) {
            const double n = 0.5 * (2 * b - rho0.j.twice);
            const double phase = -omega * (m - n) * t + w2 * (m * m - n * n) * eta_t;
            out.elements(a, b) *= std::exp(-w2 * (m - n) * (m - n) * gamma_t) * std::polar(1.0, phase);
        }
    }
    return out;
}

DickeDensityMatrix atomic_coherent_density(const AtomicCoherentParams& params, HalfInteger j)
{
    check_spin_pair(j, j);
    return pure_density(j, coherent_amplitudes(params, j));
}

DickeDensityMatrix atomic_squeezed_density(const AtomicSqueezedParams& params)
{
    return pure_density(params.j, squeezed_amplitudes(params));
}

PhaseDistribution phase_distribution_atomic(const DickeDensityMatrix& rho, const PhaseGrid& grid, Execution exec)
{
    const int dim = rho.dim();
    const int two_j = rho.j.twice;
    const double j = rho.j.value();
    const double pref = (2.0 * j + 1.0) / (4.0 * kPi);
    Eigen::MatrixXcd x(dim, dim);
    for (int a = 0; a < dim; ++a) {
        const double n = a - j;
        for (int b = 0; b < dim; ++b) {
            const double m = b - j;
            const double s = 0.5 * (n + m);
            const double w = pref * std::exp(0.5 * (special::log_binomial(two_j, a) + special::log_binomial(two_j, b))) *
                             2.0 * special::beta_integral(j + s + 1.0, j - s + 1.0);
            x(a, b) = rho.elements(a, b) * w;
        }
    }
    PhaseDistribution p(grid);
    p.values = hermitian_fourier_sum(x, grid, exec);
    return p;
}

PhaseDistribution phase_dist_coherent_halfspin(const AtomicCoherentParams& params, double omega, double t,
                                               double gamma_t, const PhaseGrid& grid)
{
    const double amp = (kPi / 4.0) * std::sin(params.alpha_p) * std::exp(-omega * omega * gamma_t);
    return tabulate(grid, [&](double phi) {
        return (1.0 + amp * std::cos(params.beta_p + omega * t - phi)) / (2.0 * kPi);
    });
}

PhaseDistribution phase_dist_squeezed_halfspin(double Theta, int p_sign, double omega, double t, double gamma_t,
                                               const PhaseGrid& grid)
{
    if (p_sign != 1 && p_sign != -1) {
        throw std::invalid_argument("phase_dist_squeezed_halfspin: p_sign must be +1 or -1");
    }
    const double amp = p_sign * kPi / (4.0 * std::cosh(Theta)) * std::exp(-omega * omega * gamma_t);
    return tabulate(grid, [&](double phi) { return (1.0 + amp * std::cos(phi - omega * t)) / (2.0 * kPi); });
}

PhaseDistribution phase_dist_two_atoms(double Theta, int p, double omega, double t, double eta_t, double gamma_t,
                                       const PhaseGrid& grid)
{
    const double w2 = omega * omega;
    const double c2 = std::cosh(2.0 * Theta);
    if (p == 0) {
        const double amp = std::exp(-4.0 * w2 * gamma_t) / (2.0 * c2);
        return tabulate(grid, [&](double phi) {
            return (1.0 - amp * std::cos(2.0 * (phi - omega * t))) / (2.0 * kPi);
        });
    }
    if (p != 1 && p != -1) {
        throw std::invalid_argument("phase_dist_two_atoms: p must be +1, -1 or 0");
    }
    const double first = p * 3.0 * kPi / (4.0 * (1.0 + c2)) * std::exp(-w2 * gamma_t);
    const double second = std::exp(-4.0 * w2 * gamma_t) / (2.0 * (1.0 + c2));
    const double ce = std::cos(w2 * eta_t);
    const double se = std::sin(w2 * eta_t);
    return tabulate(grid, [&](double phi) {
        const double x = phi - omega * t;
        const double mix = std::cos(x) * ce * std::cosh(Theta) - std::sin(x) * se * std::sinh(Theta);
        return (1.0 + first * mix + second * std::cos(2.0 * x)) / (2.0 * kPi);
    });
}

std::vector<double> number_distribution(const AtomicCoherentParams& params, HalfInteger j)
{
    check_spin_pair(j, j);
    const Eigen::VectorXcd c = coherent_amplitudes(params, j);
    std::vector<double> out(static_cast<std::size_t>(c.size()));
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        out[static_cast<std::size_t>(k)] = std::norm(c(k));
    }
    return out;
}

std::vector<double> number_distribution(const AtomicSqueezedParams& params)
{
    const Eigen::VectorXcd a = squeezed_amplitudes(params);
    std::vector<double> out(static_cast<std::size_t>(a.size()));
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        out[static_cast<std::size_t>(k)] = std::norm(a(k));
    }
    return out;
}

Eigen::MatrixXcd osc_coherent_density(double alpha_mag, double theta0, double omega, double t, double eta_t,
                                      double gamma_t, const FockTruncation& trunc)
{
    if (alpha_mag < 0.0) {
        throw std::invalid_argument("coherent amplitude |alpha| must be nonnegative");
    }
    const double lambda = alpha_mag * alpha_mag;
    // Poisson mass at n >= cutoff.
    const double tail = lambda > 0.0 ? boost::math::gamma_p(static_cast<double>(trunc.cutoff), lambda) : 0.0;
    check_cutoff(trunc, tail, "coherent state");

    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(trunc.cutoff);
    a(0) = std::exp(-0.5 * lambda);
    if (alpha_mag > 0.0) {
        for (int m = 1; m < trunc.cutoff; ++m) {
            const double mag = std::exp(-0.5 * lambda + m * std::log(alpha_mag) - 0.5 * special::log_factorial(m));
            a(m) = mag * std::polar(1.0, m * theta0);
        }
    }
    return dephased_outer(a, omega, t, eta_t, gamma_t);
}

Eigen::MatrixXcd osc_squeezed_density(double r1, double psi, double alpha_mag, double theta0, double omega, double t,
                                      double eta_t, double gamma_t, const FockTruncation& trunc)
{
    if (!(r1 > 0.0)) {
        throw std::invalid_argument("osc_squeezed_density: r1 must be positive");
    }
    if (trunc.cutoff < 1) {
        throw std::invalid_argument("Fock cutoff must be positive");
    }
    // h_n = s^n H_n(z) / sqrt(n!) with s = sqrt(tanh(r1)/2) e^{i psi/2}; then
    // z s = alpha / (2 cosh r1) stays finite as r1 -> 0.
    const std::complex<double> alpha = std::polar(alpha_mag, theta0);
    const std::complex<double> zs = alpha / (2.0 * std::cosh(r1));
    const std::complex<double> s2 = 0.5 * std::tanh(r1) * std::polar(1.0, psi);
    const double norm = std::exp(-alpha_mag * alpha_mag * (1.0 - std::tanh(r1) * std::cos(2.0 * theta0 - psi))) /
                        std::cosh(r1);

    Eigen::VectorXcd h(trunc.cutoff);
    h(0) = 1.0;
    if (trunc.cutoff > 1) {
        h(1) = 2.0 * zs;
    }
    for (int n = 1; n + 1 < trunc.cutoff; ++n) {
        h(n + 1) = (2.0 * zs * h(n) - 2.0 * std::sqrt(static_cast<double>(n)) * s2 * h(n - 1)) /
                   std::sqrt(static_cast<double>(n + 1));
    }
    const Eigen::VectorXcd a = std::sqrt(norm) * h;
    const double tail = std::abs(1.0 - a.squaredNorm());
    check_cutoff(trunc, tail, "squeezed coherent state");
    return dephased_outer(a, omega, t, eta_t, gamma_t);
}

PhaseDistribution phase_distribution_fock(const Eigen::MatrixXcd& rho, const PhaseGrid& grid, Execution exec)
{
    // sum rho_mn e^{i(n-m)theta} = sum_{a,b} X_ab e^{i(a-b)theta} with X = rho^T.
    const Eigen::MatrixXcd x = rho.transpose();
    PhaseDistribution p(grid);
    p.values = hermitian_fourier_sum(x, grid, exec);
    for (double& v : p.values) {
        v /= 2.0 * kPi;
    }
    return p;
}

PhaseDistribution phase_dist_osc_coherent(double alpha_mag, double theta0, double omega, double t, double eta_t,
                                          double gamma_t, const FockTruncation& trunc, const PhaseGrid& grid,
                                          Execution exec)
{
    return phase_distribution_fock(osc_coherent_density(alpha_mag, theta0, omega, t, eta_t, gamma_t, trunc), grid,
                                   exec);
}

PhaseDistribution phase_dist_osc_squeezed(double r1, double psi, double alpha_mag, double theta0, double omega,
                                          double t, double eta_t, double gamma_t, const FockTruncation& trunc,
                                          const PhaseGrid& grid, Execution exec)
{
    if (r1 == 0.0) {
        return phase_dist_osc_coherent(alpha_mag, theta0, omega, t, eta_t, gamma_t, trunc, grid, exec);
    }
    return phase_distribution_fock(osc_squeezed_density(r1, psi, alpha_mag, theta0, omega, t, eta_t, gamma_t, trunc),
                                   grid, exec);
}

} // namespace phasediff
