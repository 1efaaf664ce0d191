// bath_kernels.hpp: QND decoherence kernels eta(t), gamma(t) and the moments
// N, M of a squeezed thermal bath.
//
// Units: hbar = k_B = 1. The QND coupling gamma0 carries 1/energy^2, the
// dissipative one 1/time; the two bath types are distinct structs.

#pragma once

#include <complex>
#include <variant>

namespace phasediff {

struct ZeroTemperature {};
struct HighTemperature {
    double T = 0.0;
};
using QndRegime = std::variant<ZeroTemperature, HighTemperature>;

// T == 0 selects the zero-temperature form, any T > 0 the high-temperature one.
QndRegime regime_for_temperature(double T);

// Ohmic bath I(w) = (gamma0/pi) w e^{-w/omega_c}, squeezing r, phase Phi(w) = a w.
struct QndBathSpec {
    double gamma0 = 0.0;
    double omega_c = 1.0;
    double r = 0.0;
    double a = 0.0;
    QndRegime regime = ZeroTemperature{};

    // Throws std::invalid_argument on omega_c <= 0, gamma0 < 0, a < 0 or T <= 0.
    void validate() const;
};

// eta(t) = -(gamma0/pi) atan(omega_c t).
double eta(double t, const QndBathSpec& spec);

// gamma(t) from the closed form matching spec.regime. Defined for t > 2a
// (t >= 0 when a == 0); otherwise throws DomainError.
double gamma_qnd(double t, const QndBathSpec& spec);

enum class MomentConvention { Qubit, Oscillator };

struct DissipativeBathMoments {
    double N = 0.0;
    std::complex<double> M{0.0, 0.0};
    double N_th = 0.0;
    double r = 0.0;
    double Phi = 0.0;
    double T = 0.0;
    double omega = 1.0;
    // Signed amplitude with M = R e^{i Phi}; negative for r > 0 under the qubit convention.
    double R = 0.0;

    double abs_M() const { return std::abs(M); }
};

// Planck occupation 1/(e^{omega/T} - 1); 0 at T == 0.
double planck_occupation(double omega, double T);

// N = N_th (cosh^2 r + sinh^2 r) + sinh^2 r,
// M = -/+ (1/2) sinh(2r) e^{i Phi} (2 N_th + 1)  (minus: qubit, plus: oscillator).
DissipativeBathMoments bath_moments(double r, double Phi, double T, double omega, MomentConvention convention);

} // namespace phasediff
