#include "phasediff/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "phasediff/errors.hpp"

namespace phasediff::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

using Mat = Eigen::MatrixXcd;
using Rhs = std::function<Mat(const Mat&)>;

Mat rk4(const Rhs& f, Mat y, double t, const OdeConfig& cfg)
{
    const int steps = std::max(1, static_cast<int>(std::ceil(t / cfg.fixed_step - 1e-12)));
    const double h = t / steps;
    for (int i = 0; i < steps; ++i) {
        const Mat k1 = f(y);
        const Mat k2 = f(y + 0.5 * h * k1);
        const Mat k3 = f(y + 0.5 * h * k2);
        const Mat k4 = f(y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y;
}

// Dormand-Prince 5(4) with the standard embedded error estimate.
Mat dormand_prince(const Rhs& f, Mat y, double t_end, const OdeConfig& cfg)
{
    static constexpr double a21 = 1.0 / 5.0;
    static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                            a54 = -212.0 / 729.0;
    static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                            a65 = -5103.0 / 18656.0;
    static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0,
                            b6 = 11.0 / 84.0;
    static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                            e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

    double t = 0.0;
    double h = std::min(cfg.max_step, std::max(t_end, cfg.min_step) * 1e-2);
    if (t_end <= 0.0) {
        return y;
    }
    while (t < t_end) {
        h = std::min({h, cfg.max_step, t_end - t});
        if (h < cfg.min_step) {
            throw std::runtime_error("ODE step size underflow at t = " + std::to_string(t));
        }
        const Mat k1 = f(y);
        const Mat k2 = f(y + h * (a21 * k1));
        const Mat k3 = f(y + h * (a31 * k1 + a32 * k2));
        const Mat k4 = f(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const Mat k5 = f(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Mat k6 = f(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Mat y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Mat k7 = f(y5);
        const Mat err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double ratio = 0.0;
        for (Eigen::Index i = 0; i < err.size(); ++i) {
            const double scale = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y(i)), std::abs(y5(i)));
            ratio = std::max(ratio, std::abs(err(i)) / scale);
        }
        if (ratio <= 1.0) {
            t += h;
            y = y5;
        }
        const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
        h *= factor;
    }
    return y;
}

Mat integrate(const Rhs& f, const Mat& y0, double t, const OdeConfig& cfg)
{
    cfg.validate();
    if (t < 0.0) {
        throw std::invalid_argument("ODE integration needs t >= 0");
    }
    return cfg.method == OdeConfig::Method::FixedRk4 ? rk4(f, y0, t, cfg) : dormand_prince(f, y0, t, cfg);
}

Mat annihilation(int dim)
{
    Mat a = Mat::Zero(dim, dim);
    for (int k = 1; k < dim; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

Eigen::MatrixXd spin_jy_times_i(HalfInteger j)
{
    // i J_y = (J+ - J-)/2 is real; index k <-> m = -j + k.
    const int dim = j.twice + 1;
    const double jj = j.value();
    Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(dim, dim);
    for (int k = 0; k + 1 < dim; ++k) {
        const double m = k - jj;
        jp(k + 1, k) = std::sqrt(jj * (jj + 1.0) - m * (m + 1.0));
    }
    return 0.5 * (jp - jp.transpose());
}

} // namespace

void OdeConfig::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(max_step > 0.0) || !(fixed_step > 0.0) || !(min_step > 0.0)) {
        throw std::invalid_argument("OdeConfig: tolerances and steps must be positive");
    }
}

Eigen::Matrix2cd integrate_lindblad_qubit(const Eigen::Matrix2cd& rho0, const QubitLindbladSpec& spec, double t,
                                          const OdeConfig& config)
{
    // |0> = index 0 (ground), |1> = index 1; raising operator |1><0|.
    Mat sp = Mat::Zero(2, 2);
    sp(1, 0) = 1.0;
    const Mat sm = sp.adjoint();
    Mat sz = Mat::Zero(2, 2);
    sz(0, 0) = -1.0;
    sz(1, 1) = 1.0;
    const Mat spsm = sp * sm;
    const Mat smsp = sm * sp;
    const double g = spec.gamma0;
    const double n = spec.moments.N;
    const std::complex<double> m = spec.moments.M;
    const std::complex<double> half_i_omega(0.0, 0.5 * spec.omega);

    const Rhs rhs = [&](const Mat& r) -> Mat {
        Mat d = -half_i_omega * (sz * r - r * sz);
        d += g * (n + 1.0) * (sm * r * sp - 0.5 * spsm * r - 0.5 * r * spsm);
        d += g * n * (sp * r * sm - 0.5 * smsp * r - 0.5 * r * smsp);
        d -= g * m * (sp * r * sp);
        d -= g * std::conj(m) * (sm * r * sm);
        return d;
    };
    const Mat out = integrate(rhs, Mat(rho0), t, config);
    return out;
}

Eigen::MatrixXcd integrate_lindblad_oscillator(const Eigen::MatrixXcd& rho0, const OscillatorLindbladSpec& spec,
                                               double t, const OdeConfig& config, double leakage_tolerance)
{
    const int dim = static_cast<int>(rho0.rows());
    const Mat a = annihilation(dim);
    const Mat ad = a.adjoint();
    const Mat ada = ad * a;
    const Mat aad = a * ad;
    const Mat a2 = a * a;
    const Mat ad2 = ad * ad;
    const double g = spec.gamma0;
    const double n = spec.moments.N;
    const std::complex<double> m = spec.moments.M;

    const Rhs rhs = [&](const Mat& r) -> Mat {
        Mat d = g * (n + 1.0) * (a * r * ad - 0.5 * ada * r - 0.5 * r * ada);
        d += g * n * (ad * r * a - 0.5 * aad * r - 0.5 * r * aad);
        d += g * m * (ad * r * ad - 0.5 * ad2 * r - 0.5 * r * ad2);
        d += g * std::conj(m) * (a * r * a - 0.5 * a2 * r - 0.5 * r * a2);
        return d;
    };
    Mat out = integrate(rhs, rho0, t, config);
    const double top = out(dim - 1, dim - 1).real();
    const double trace = out.trace().real();
    if (top > leakage_tolerance * trace) {
        throw TruncationError("oscillator ODE: population leaks to the Fock boundary", dim, top / trace);
    }
    return out;
}

Eigen::MatrixXcd squeezed_coherent_density_expm(double r, double Phi, std::complex<double> eta0, int cutoff,
                                                int work_dim)
{
    if (cutoff > work_dim) {
        throw std::invalid_argument("squeezed_coherent_density_expm: cutoff exceeds work dimension");
    }
    const Mat a = annihilation(work_dim);
    const Mat ad = a.adjoint();
    const Mat displacement = (eta0 * ad - std::conj(eta0) * a).exp();
    const Mat squeeze = squeeze_operator_expm(r, Phi, work_dim);
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(work_dim);
    vac(0) = 1.0;
    const Eigen::VectorXcd psi = squeeze * (displacement * vac);
    const Eigen::VectorXcd head = psi.head(cutoff);
    return head * head.adjoint();
}

PhaseDistribution phase_dist_by_quadrature(const DickeDensityMatrix& rho, const PhaseGrid& grid, double tol)
{
    const int two_j = rho.j.twice;
    const int dim = two_j + 1;
    std::vector<double> log_binom(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        log_binom[static_cast<std::size_t>(k)] =
            std::lgamma(two_j + 1.0) - std::lgamma(k + 1.0) - std::lgamma(two_j - k + 1.0);
    }
    const double pref = (two_j + 1.0) / (4.0 * kPi);

    PhaseDistribution p(grid);
    for (int g = 0; g < grid.count; ++g) {
        const double phi = grid.angle(g);
        auto integrand = [&](double theta) {
            // <theta, phi | j, m> for the atomic coherent state, m = -j + k.
            const double s = std::sin(theta / 2.0);
            const double c = std::cos(theta / 2.0);
            Eigen::VectorXcd bra(dim);
            for (int k = 0; k < dim; ++k) {
                const double mag =
                    std::exp(0.5 * log_binom[static_cast<std::size_t>(k)]) * std::pow(s, k) * std::pow(c, two_j - k);
                bra(k) = mag * std::polar(1.0, static_cast<double>(k) * phi);
            }
            const std::complex<double> q = bra.dot(rho.elements.transpose() * bra);
            return pref * std::sin(theta) * q.real();
        };
        double err = 0.0;
        const double val =
            boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, kPi, 15, tol, &err);
        if (err > 1e3 * tol + 1e-12) {
            throw std::runtime_error("phase quadrature did not converge (error " + std::to_string(err) + ")");
        }
        p.values[static_cast<std::size_t>(g)] = val;
    }
    return p;
}

double gamma_by_quadrature(double t, const QndBathSpec& spec)
{
    spec.validate();
    if (t <= 0.0) {
        return 0.0;
    }
    const double ch = std::cosh(spec.r);
    const double sh = std::sinh(spec.r);
    const double* hot_t = nullptr;
    if (const auto* hot = std::get_if<HighTemperature>(&spec.regime)) {
        hot_t = &hot->T;
    }
    auto integrand = [&](double w) {
        const std::complex<double> x = (std::polar(1.0, w * t) - 1.0) * ch +
                                       (std::polar(1.0, -w * t) - 1.0) * sh * std::polar(1.0, 2.0 * spec.a * w);
        const double coth = hot_t != nullptr ? 2.0 * (*hot_t) / w : 1.0;
        return spec.gamma0 / kPi * std::exp(-w / spec.omega_c) / w * coth * std::norm(x) / 2.0;
    };
    // One panel per period of the fastest term of the integrand, out to 45 cutoff lengths.
    const double fastest = std::max({t, std::abs(t - 2.0 * spec.a), 1e-3});
    const double panel = kPi / fastest;
    const double upper = 45.0 * spec.omega_c;
    double total = 0.0;
    double err_total = 0.0;
    for (double lo = 0.0; lo < upper; lo += panel) {
        const double hi = std::min(lo + panel, upper);
        double err = 0.0;
        total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, lo, hi, 4, 1e-13, &err);
        err_total += err;
    }
    if (!(err_total <= 1e-9 * std::abs(total) + 1e-300)) {
        throw std::runtime_error("gamma quadrature did not converge (error " + std::to_string(err_total) + ")");
    }
    return total;
}

Eigen::MatrixXd wigner_d_half_pi_expm(HalfInteger j)
{
    // exp(-i pi/2 J_y) = exp(-(pi/2) (i J_y)), with i J_y real antisymmetric.
    const Eigen::MatrixXd ijy = spin_jy_times_i(j);
    return (-(kPi / 2.0) * ijy).exp();
}

Eigen::MatrixXcd squeeze_operator_expm(double r, double phi, int dim)
{
    const Mat a = annihilation(dim);
    const Mat ad = a.adjoint();
    const std::complex<double> zeta = r * std::polar(1.0, phi);
    const Mat gen = 0.5 * (std::conj(zeta) * a * a - zeta * ad * ad);
    return gen.exp();
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b)
{
    const Mat d = a - b;
    const Mat h = 0.5 * (d + d.adjoint());
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Mat>(h).eigenvalues();
    return 0.5 * ev.cwiseAbs().sum();
}

} // namespace phasediff::oracle
