// dissipative_qubit.hpp: closed-form Lindblad evolution of a two-level atom in
// a squeezed thermal bath.
//
// Basis: index 0 = |0> (m = -1/2), index 1 = |1> (m = +1/2), sigma_+ = |1><0|.
// This matches the Dicke index order used by qnd_phase at j = 1/2.

#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "phasediff/bath_kernels.hpp"
#include "phasediff/phase_grid.hpp"
#include "phasediff/qnd_phase.hpp"

namespace phasediff {

struct QubitLindbladSpec {
    double omega = 1.0;
    double gamma0 = 0.0;
    DissipativeBathMoments moments;
    double gamma_plus = 0.0;
    double gamma_minus = 0.0;
    double gamma_beta = 0.0;
    std::complex<double> alpha{0.0, 0.0};

    // Derives moments (qubit convention), gamma_+-, gamma_beta and alpha.
    static QubitLindbladSpec make(double omega, double gamma0, double r, double Phi, double T);
    // Same, from moments supplied directly (used to inject faults in validation).
    static QubitLindbladSpec from_moments(double omega, double gamma0, const DissipativeBathMoments& moments);
};

// Principal square root of gamma0^2 |M|^2 - omega^2.
std::complex<double> alpha_param(const QubitLindbladSpec& spec);

// e^{-gamma_beta t/2} cosh(alpha t) and e^{-gamma_beta t/2} sinh(alpha t)/alpha, both real.
struct HyperbolicFactors {
    double cosh_term = 1.0;
    double sinh_over_alpha = 0.0;
};
HyperbolicFactors hyperbolic_factors(const QubitLindbladSpec& spec, double t);

// The closed-form solution at fixed (spec, t) as a real affine map on the
// Bloch coordinates v = (tr rho, <sigma_x>, <sigma_y>, <sigma_z>).
class QubitPropagator {
public:
    QubitPropagator(const QubitLindbladSpec& spec, double t);

    Eigen::Matrix2cd apply(const Eigen::Matrix2cd& rho0) const;
    const Eigen::Matrix4d& bloch_map() const { return map_; }

private:
    Eigen::Matrix4d map_;
};

// Term-by-term closed form; same result as QubitPropagator(spec, t).apply(rho0).
Eigen::Matrix2cd propagate_qubit(const Eigen::Matrix2cd& rho0, const QubitLindbladSpec& spec, double t);

PhaseDistribution phase_dist_qubit_coherent(const AtomicCoherentParams& params, const QubitLindbladSpec& spec,
                                            double t, const PhaseGrid& grid);

PhaseDistribution phase_dist_qubit_squeezed(double Theta, int p_sign, const QubitLindbladSpec& spec, double t,
                                            const PhaseGrid& grid);

// <1/2| rho(t) |1/2> for an atomic coherent start.
double excited_population(const AtomicCoherentParams& params, const QubitLindbladSpec& spec, double t);

// Pauli operators in the basis above.
Eigen::Matrix2cd sigma_plus();
Eigen::Matrix2cd sigma_minus();
Eigen::Matrix2cd sigma_z();

} // namespace phasediff
