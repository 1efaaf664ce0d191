#include "phasediff/dissipative_oscillator.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "phasediff/errors.hpp"
#include "phasediff/special_functions.hpp"

namespace phasediff {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxMixtureTerms = 4000;
constexpr int kMaxInternalDim = 1500;

using special::generalized_laguerre;
using special::log_binomial;
using special::log_factorial;

// <u| D(eta) |l>, using the l <= u form and its mirror for u < l.
std::complex<double> displaced_number_overlap(int u, int l, std::complex<double> eta)
{
    const double x = std::norm(eta);
    if (x == 0.0) {
        return u == l ? 1.0 : 0.0;
    }
    const double log_abs = std::log(std::abs(eta));
    const double arg = std::arg(eta);
    if (u >= l) {
        const double mag = std::exp(-0.5 * x + 0.5 * (log_factorial(l) - log_factorial(u)) + (u - l) * log_abs);
        return mag * generalized_laguerre(l, u - l, x) * std::polar(1.0, (u - l) * arg);
    }
    const double mag = std::exp(-0.5 * x + 0.5 * (log_factorial(u) - log_factorial(l)) + (l - u) * log_abs);
    const double sign = ((l - u) % 2 == 0) ? 1.0 : -1.0;
    return sign * mag * generalized_laguerre(u, l - u, x) * std::polar(1.0, -(l - u) * arg);
}

// Columns sqrt(prefactor w^k) a^+k |eta~> / sqrt(k!), each built from the
// generalized coherent states D(eta~)|l>, l <= k.
Eigen::MatrixXcd mixture_columns(const GscsMixture& mix, int terms, int dim)
{
    const std::complex<double> eta = mix.eta_tilde;
    const double abs_eta = std::abs(eta);
    Eigen::MatrixXcd overlap(dim, terms);
    for (int l = 0; l < terms; ++l) {
        for (int u = 0; u < dim; ++u) {
            overlap(u, l) = displaced_number_overlap(u, l, eta);
        }
    }
    Eigen::MatrixXcd cols = Eigen::MatrixXcd::Zero(dim, terms);
    for (int k = 0; k < terms; ++k) {
        const double log_weight = 0.5 * (std::log(mix.prefactor) + (k > 0 ? k * std::log(mix.weight_ratio) : 0.0));
        for (int l = 0; l <= k; ++l) {
            // C(k,l) sqrt(l!) / sqrt(k!) = sqrt(C(k,l)) / sqrt((k-l)!)
            if (abs_eta == 0.0 && l != k) {
                continue;
            }
            const double log_c = log_weight + 0.5 * log_binomial(k, l) - 0.5 * log_factorial(k - l) +
                                 (k > l ? (k - l) * std::log(abs_eta) : 0.0);
            const std::complex<double> c = std::exp(log_c) * std::polar(1.0, -(k - l) * std::arg(eta));
            cols.col(k) += c * overlap.col(l);
        }
    }
    return cols;
}

int choose_internal_dim(const GscsMixture& mix, int terms, const OscillatorCutoffs& cutoffs)
{
    if (cutoffs.internal > 0) {
        return cutoffs.internal;
    }
    const double n_mean = std::norm(mix.eta_tilde) + terms;
    int dim = std::max(cutoffs.fock, static_cast<int>(n_mean + 10.0 * std::sqrt(n_mean + 1.0)) + 40);
    while (dim <= kMaxInternalDim) {
        const double tail = 1.0 - mixture_columns(mix, terms, dim).squaredNorm();
        if (tail <= 0.1 * cutoffs.tail_tolerance) {
            return dim;
        }
        dim += 40;
    }
    throw TruncationError("squeezed-frame dimension did not converge", kMaxInternalDim, 1.0);
}

int choose_terms(const GscsMixture& mix, const OscillatorCutoffs& cutoffs)
{
    return cutoffs.k_max > 0 ? cutoffs.k_max : mixture_terms(mix, 0.1 * cutoffs.tail_tolerance);
}

// GCS factor eta~^{u-l} L_l^{u-l}(|eta~|^2) / sqrt(u!); the negative
// superscript for u < l goes through generalized_laguerre's identity.
std::complex<double> printed_gcs_factor(int u, int l, std::complex<double> eta)
{
    const double x = std::norm(eta);
    if (x == 0.0) {
        return u == l ? std::exp(-0.5 * log_factorial(u)) : 0.0;
    }
    const double mag = std::exp((u - l) * std::log(std::abs(eta)) - 0.5 * log_factorial(u));
    return mag * generalized_laguerre(l, u - l, x) * std::polar(1.0, (u - l) * std::arg(eta));
}

struct DirectTerms {
    Eigen::MatrixXcd z;          // fock x terms: G y_k
    std::vector<double> weight;  // prefactor e^{-|eta~|^2} w^k
};

DirectTerms direct_terms(const GscsMixture& mix, int terms, int fock, int dim)
{
    const std::complex<double> eta = mix.eta_tilde;
    const double x = std::norm(eta);
    Eigen::MatrixXcd f(dim, terms);
    for (int l = 0; l < terms; ++l) {
        for (int u = 0; u < dim; ++u) {
            f(u, l) = printed_gcs_factor(u, l, eta);
        }
    }
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(dim, terms);
    DirectTerms out;
    out.weight.resize(static_cast<std::size_t>(terms));
    for (int k = 0; k < terms; ++k) {
        for (int l = 0; l <= k; ++l) {
            if (x == 0.0 && l != k) {
                continue;
            }
            // C(k,l) l! / sqrt(k!) (eta~*)^{k-l}
            const double log_c = log_binomial(k, l) + log_factorial(l) - 0.5 * log_factorial(k) +
                                 (k > l ? (k - l) * std::log(std::abs(eta)) : 0.0);
            y.col(k) += std::exp(log_c) * std::polar(1.0, -(k - l) * std::arg(eta)) * f.col(l);
        }
        out.weight[static_cast<std::size_t>(k)] =
            mix.prefactor * std::exp(-x) * (k > 0 ? std::pow(mix.weight_ratio, k) : 1.0);
    }
    const Eigen::MatrixXcd g = special::squeeze_matrix(fock, dim, std::abs(mix.zeta), std::arg(mix.zeta));
    out.z = g * y;
    return out;
}

std::vector<double> direct_values(const DirectTerms& d, double omega, double t, const PhaseGrid& grid,
                                  Execution exec)
{
    const Eigen::Index fock = d.z.rows();
    const Eigen::Index terms = d.z.cols();
    return parallel_map<double>(
        static_cast<std::size_t>(grid.count),
        [&](std::size_t k) {
            const double shift = grid.angle(static_cast<int>(k)) + omega * t;
            double total = 0.0;
            for (Eigen::Index term = 0; term < terms; ++term) {
                std::complex<double> amp{0.0, 0.0};
                for (Eigen::Index m = 0; m < fock; ++m) {
                    amp += d.z(m, term) * std::polar(1.0, -static_cast<double>(m) * shift);
                }
                total += d.weight[static_cast<std::size_t>(term)] * std::norm(amp);
            }
            return total / (2.0 * kPi);
        },
        exec);
}

} // namespace

OscillatorLindbladSpec OscillatorLindbladSpec::make(double omega, double gamma0, double r, double Phi, double T)
{
    if (!(omega > 0.0)) {
        throw std::invalid_argument("OscillatorLindbladSpec: omega must be positive");
    }
    if (!(gamma0 > 0.0)) {
        throw std::invalid_argument("OscillatorLindbladSpec: gamma0 must be positive");
    }
    OscillatorLindbladSpec s;
    s.omega = omega;
    s.gamma0 = gamma0;
    s.moments = bath_moments(r, Phi, T, omega, MomentConvention::Oscillator);
    s.zeta_mag = r;
    s.zeta_phase = Phi;
    const DampingCoefficients c = damping_coeffs(s);
    s.alpha_coef = c.alpha;
    s.beta_coef = c.beta;
    return s;
}

double consistency_residual(const DissipativeBathMoments& moments, std::complex<double> zeta)
{
    const double az = std::abs(zeta);
    if (az == 0.0) {
        return std::abs(moments.M) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const std::complex<double> unit = zeta / az;
    const std::complex<double> lhs = moments.M / unit / std::tanh(az) + unit * std::conj(moments.M) * std::tanh(az);
    return std::abs(lhs - (2.0 * moments.N + 1.0));
}

DampingCoefficients damping_coeffs(const OscillatorLindbladSpec& spec)
{
    const std::complex<double> zeta = spec.zeta();
    const double az = std::abs(zeta);
    const double n = spec.moments.N;
    const double residual = consistency_residual(spec.moments, zeta);
    if (residual > 1e-10 * (2.0 * n + 1.0)) {
        throw ConsistencyError("bath moments violate the squeezing consistency condition (residual " +
                               std::to_string(residual) + ")");
    }
    const double g = spec.gamma0;
    double cross = 0.0;
    if (az > 0.0) {
        cross = g / (2.0 * az) * std::sinh(2.0 * az) * 2.0 * (spec.moments.M * std::conj(zeta)).real();
    }
    DampingCoefficients c;
    c.alpha = g * n * std::cosh(2.0 * az) + g * std::cosh(az) * std::cosh(az) - cross;
    c.beta = g * n * std::cosh(2.0 * az) + g * std::sinh(az) * std::sinh(az) - cross;
    if (std::abs(c.alpha - c.beta - g) > 1e-10 * std::max(1.0, std::abs(c.alpha))) {
        throw ConsistencyError("damping coefficients do not satisfy alpha - beta = gamma0");
    }
    return c;
}

GscsMixture mixture_params(const OscillatorLindbladSpec& spec, double t, std::complex<double> eta0)
{
    if (t < 0.0) {
        throw std::invalid_argument("mixture_params: t must be nonnegative");
    }
    GscsMixture mix;
    mix.beta_tilde = spec.beta_coef / spec.gamma0 * (-std::expm1(-spec.gamma0 * t));
    mix.eta_tilde = eta0 * std::exp(-0.5 * spec.gamma0 * t) / (1.0 + mix.beta_tilde);
    mix.zeta = spec.zeta();
    mix.weight_ratio = mix.beta_tilde / (1.0 + mix.beta_tilde);
    mix.prefactor = std::exp(-mix.beta_tilde * std::norm(mix.eta_tilde)) / (1.0 + mix.beta_tilde);
    return mix;
}

int mixture_terms(const GscsMixture& mix, double tol)
{
    if (mix.weight_ratio == 0.0) {
        return 1;
    }
    const double x = std::norm(mix.eta_tilde);
    double total = 0.0;
    for (int k = 0; k < kMaxMixtureTerms; ++k) {
        // trace weight of term k: prefactor w^k L_k(-|eta~|^2)
        total += mix.prefactor * std::pow(mix.weight_ratio, k) * generalized_laguerre(k, 0, -x);
        if (1.0 - total <= tol) {
            return k + 1;
        }
    }
    throw TruncationError("mixture weights did not converge", kMaxMixtureTerms, 1.0 - total);
}

Eigen::MatrixXcd fock_density_from_gscs(const GscsMixture& mix, const OscillatorCutoffs& cutoffs)
{
    if (cutoffs.fock < 1) {
        throw std::invalid_argument("Fock cutoff must be positive");
    }
    const int terms = choose_terms(mix, cutoffs);
    const int dim = choose_internal_dim(mix, terms, cutoffs);
    const Eigen::MatrixXcd cols = mixture_columns(mix, terms, dim);
    const Eigen::MatrixXcd g = special::squeeze_matrix(cutoffs.fock, dim, std::abs(mix.zeta), std::arg(mix.zeta));
    const Eigen::MatrixXcd z = g * cols;
    Eigen::MatrixXcd rho = z * z.adjoint();
    const double tail = 1.0 - rho.trace().real();
    if (tail > cutoffs.tail_tolerance) {
        throw TruncationError("dissipative oscillator density: Fock cutoff too small", cutoffs.fock, tail);
    }
    return rho;
}

Eigen::MatrixXcd to_schrodinger_picture(const Eigen::MatrixXcd& rho_interaction, double omega, double t)
{
    Eigen::MatrixXcd out = rho_interaction;
    for (Eigen::Index m = 0; m < out.rows(); ++m) {
        for (Eigen::Index n = 0; n < out.cols(); ++n) {
            out(m, n) *= std::polar(1.0, -omega * static_cast<double>(m - n) * t);
        }
    }
    return out;
}

PhaseDistribution phase_dist_osc_dissipative(const OscillatorLindbladSpec& spec, std::complex<double> eta0, double t,
                                             const OscillatorCutoffs& cutoffs, const PhaseGrid& grid,
                                             Execution exec)
{
    const GscsMixture mix = mixture_params(spec, t, eta0);
    const int terms = choose_terms(mix, cutoffs);
    const int dim = choose_internal_dim(mix, terms, cutoffs);

    PhaseDistribution p(grid);
    const DirectTerms coarse = direct_terms(mix, terms, cutoffs.fock, dim);
    p.values = direct_values(coarse, spec.omega, t, grid, exec);

    const int step = std::max(1, cutoffs.check_step);
    const DirectTerms fine = direct_terms(mix, terms, cutoffs.fock + step, dim + step);
    const std::vector<double> check = direct_values(fine, spec.omega, t, grid, exec);
    double worst = 0.0;
    for (std::size_t k = 0; k < check.size(); ++k) {
        worst = std::max(worst, std::abs(check[k] - p.values[k]));
    }
    if (worst > cutoffs.agreement_tolerance) {
        throw TruncationError("dissipative oscillator phase distribution: cutoffs disagree", cutoffs.fock, worst);
    }
    return p;
}

} // namespace phasediff
