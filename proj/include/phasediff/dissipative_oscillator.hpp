// dissipative_oscillator.hpp: closed-form Lindblad evolution of a harmonic
// oscillator in a squeezed thermal bath, starting from S(zeta) D(eta0)|0>.
//
// The state at time t is a mixture of generalized squeezed coherent states
// S(zeta) D(eta~) |l>. System squeezing is tied to the bath: zeta = r e^{i Phi}.
// eta0 is the initial displacement (kept distinct from the QND kernel eta(t)).

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "phasediff/bath_kernels.hpp"
#include "phasediff/kernels.hpp"
#include "phasediff/phase_grid.hpp"

namespace phasediff {

struct OscillatorLindbladSpec {
    double omega = 1.0;
    double gamma0 = 0.0;
    DissipativeBathMoments moments;
    double zeta_mag = 0.0;
    double zeta_phase = 0.0;
    double alpha_coef = 0.0;
    double beta_coef = 0.0;

    // Moments in the oscillator convention, zeta = r e^{i Phi}, coefficients from damping_coeffs.
    static OscillatorLindbladSpec make(double omega, double gamma0, double r, double Phi, double T);

    std::complex<double> zeta() const { return zeta_mag * std::polar(1.0, zeta_phase); }
};

// (|z|/z) M coth|z| + (z/|z|) M* tanh|z| - (2N + 1); zero for a consistent bath.
double consistency_residual(const DissipativeBathMoments& moments, std::complex<double> zeta);

struct DampingCoefficients {
    double alpha = 0.0;
    double beta = 0.0;
};

// alpha, beta of the squeezed-frame equation. Throws ConsistencyError when the
// consistency residual or alpha - beta - gamma0 exceeds 1e-10 (relative).
DampingCoefficients damping_coeffs(const OscillatorLindbladSpec& spec);

struct GscsMixture {
    double beta_tilde = 0.0;
    std::complex<double> eta_tilde{0.0, 0.0};
    std::complex<double> zeta{0.0, 0.0};
    // rho = prefactor * sum_k weight_ratio^k / k! * S a^+k |eta~><eta~| a^k S^+
    double weight_ratio = 0.0;
    double prefactor = 1.0;
};

// beta~(t) = (beta/gamma0)(1 - e^{-gamma0 t}), eta~(t) = eta0 e^{-gamma0 t/2} / (1 + beta~).
GscsMixture mixture_params(const OscillatorLindbladSpec& spec, double t, std::complex<double> eta0);

struct OscillatorCutoffs {
    int fock = 160;          // output Fock dimension
    int internal = 0;        // squeezed-frame dimension; 0 = grow until the trace tail is met
    int k_max = 0;           // mixture terms; 0 = until the weight tail is met
    double tail_tolerance = 1e-10;
    int check_step = 20;     // second cutoff for the agreement check
    double agreement_tolerance = 1e-8;
};

// Number of mixture terms whose weights sum to 1 within tol.
int mixture_terms(const GscsMixture& mix, double tol);

// Interaction-picture Fock density matrix (fock x fock) of the mixture, with
// D(eta~)|l> expanded in Fock states through Laguerre polynomials.
// Throws TruncationError when 1 - trace exceeds cutoffs.tail_tolerance.
Eigen::MatrixXcd fock_density_from_gscs(const GscsMixture& mix, const OscillatorCutoffs& cutoffs);

// rho_mn e^{-i omega (m - n) t}.
Eigen::MatrixXcd to_schrodinger_picture(const Eigen::MatrixXcd& rho_interaction, double omega, double t);

// Direct evaluation of the mixture's phase distribution in the Schrodinger
// picture, summing over (m, n, u, v, k, l, p) without forming rho. Evaluated at
// two cutoffs; disagreement beyond agreement_tolerance throws TruncationError.
PhaseDistribution phase_dist_osc_dissipative(const OscillatorLindbladSpec& spec, std::complex<double> eta0, double t,
                                             const OscillatorCutoffs& cutoffs, const PhaseGrid& grid,
                                             Execution exec = Execution::Parallel);

} // namespace phasediff
