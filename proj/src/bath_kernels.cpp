#include "phasediff/bath_kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "phasediff/errors.hpp"

namespace phasediff {

namespace {

constexpr double kPi = std::numbers::pi;

double gamma_zero_temperature(double t, const QndBathSpec& s)
{
    const double wc = s.omega_c;
    const double c2 = std::cosh(2.0 * s.r);
    const double s2 = std::sinh(2.0 * s.r);
    const double ratio = (1.0 + 4.0 * wc * wc * (t - s.a) * (t - s.a)) /
                         std::pow(1.0 + wc * wc * (t - 2.0 * s.a) * (t - 2.0 * s.a), 2);
    return s.gamma0 / (2.0 * kPi) * c2 * std::log1p(wc * wc * t * t) -
           s.gamma0 / (4.0 * kPi) * s2 * std::log(ratio) -
           s.gamma0 / (4.0 * kPi) * s2 * std::log1p(4.0 * s.a * s.a * wc * wc);
}

double gamma_high_temperature(double t, const QndBathSpec& s, double T)
{
    const double wc = s.omega_c;
    const double c2 = std::cosh(2.0 * s.r);
    const double s2 = std::sinh(2.0 * s.r);
    const double tm = t - s.a;
    const double t2m = t - 2.0 * s.a;

    const double even = 2.0 * wc * t * std::atan(wc * t) - std::log1p(wc * wc * t * t);
    const double odd = 4.0 * wc * tm * std::atan(2.0 * wc * tm) -
                       4.0 * wc * t2m * std::atan(wc * t2m) +
                       4.0 * s.a * wc * std::atan(2.0 * s.a * wc) +
                       2.0 * std::log1p(wc * wc * t2m * t2m) - std::log1p(4.0 * wc * wc * tm * tm) -
                       std::log1p(4.0 * s.a * s.a * wc * wc);

    return s.gamma0 * T / (kPi * wc) * c2 * even - s.gamma0 * T / (2.0 * kPi * wc) * s2 * odd;
}

} // namespace

QndRegime regime_for_temperature(double T)
{
    if (T < 0.0) {
        throw std::invalid_argument("temperature must be nonnegative");
    }
    if (T == 0.0) {
        return ZeroTemperature{};
    }
    return HighTemperature{T};
}

void QndBathSpec::validate() const
{
    if (!(omega_c > 0.0)) {
        throw std::invalid_argument("QndBathSpec: omega_c must be positive");
    }
    if (gamma0 < 0.0) {
        throw std::invalid_argument("QndBathSpec: gamma0 must be nonnegative");
    }
    if (a < 0.0) {
        throw std::invalid_argument("QndBathSpec: a must be nonnegative");
    }
    if (const auto* hot = std::get_if<HighTemperature>(&regime); hot != nullptr && !(hot->T > 0.0)) {
        throw std::invalid_argument("QndBathSpec: high-temperature regime needs T > 0");
    }
}

double eta(double t, const QndBathSpec& spec)
{
    return -(spec.gamma0 / kPi) * std::atan(spec.omega_c * t);
}

double gamma_qnd(double t, const QndBathSpec& spec)
{
    spec.validate();
    if (spec.a > 0.0 ? !(t > 2.0 * spec.a) : t < 0.0) {
        throw DomainError("gamma_qnd: t = " + std::to_string(t) + " outside t > 2a (a = " +
                          std::to_string(spec.a) + ")");
    }
    if (const auto* hot = std::get_if<HighTemperature>(&spec.regime)) {
        return gamma_high_temperature(t, spec, hot->T);
    }
    return gamma_zero_temperature(t, spec);
}

double planck_occupation(double omega, double T)
{
    if (!(omega > 0.0)) {
        throw std::invalid_argument("planck_occupation: omega must be positive");
    }
    if (T < 0.0) {
        throw std::invalid_argument("planck_occupation: T must be nonnegative");
    }
    if (T == 0.0) {
        return 0.0;
    }
    return 1.0 / std::expm1(omega / T);
}

DissipativeBathMoments bath_moments(double r, double Phi, double T, double omega, MomentConvention convention)
{
    DissipativeBathMoments m;
    m.r = r;
    m.Phi = Phi;
    m.T = T;
    m.omega = omega;
    m.N_th = planck_occupation(omega, T);
    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    m.N = m.N_th * (ch * ch + sh * sh) + sh * sh;
    const double sign = convention == MomentConvention::Qubit ? -1.0 : 1.0;
    m.R = sign * 0.5 * std::sinh(2.0 * r) * (2.0 * m.N_th + 1.0);
    m.M = m.R * std::polar(1.0, Phi);
    return m;
}

} // namespace phasediff
