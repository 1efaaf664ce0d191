// oracle.hpp: brute-force references for the closed forms. ODE integration of
// both master equations, quadrature phase distributions and bath kernels, and
// matrix-exponential special functions.
//
// Nothing here reuses the closed-form matrix assembly it is compared against.

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "phasediff/bath_kernels.hpp"
#include "phasediff/dissipative_oscillator.hpp"
#include "phasediff/dissipative_qubit.hpp"
#include "phasediff/phase_grid.hpp"
#include "phasediff/qnd_phase.hpp"
#include "phasediff/special_functions.hpp"

namespace phasediff::oracle {

struct OdeConfig {
    enum class Method { FixedRk4, DormandPrince };
    Method method = Method::DormandPrince;
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    double max_step = 0.05;
    double fixed_step = 1e-3;  // FixedRk4 only
    double min_step = 1e-14;   // below this the adaptive integrator gives up

    void validate() const;
};

// Schrodinger-picture qubit master equation, coherent term -i(omega/2)[sigma_z, rho].
Eigen::Matrix2cd integrate_lindblad_qubit(const Eigen::Matrix2cd& rho0, const QubitLindbladSpec& spec, double t,
                                          const OdeConfig& config = {});

// Interaction-picture oscillator master equation on the Fock space of
// dimension rho0.rows(). Throws TruncationError when the population of the
// top Fock level exceeds leakage_tolerance times the trace.
Eigen::MatrixXcd integrate_lindblad_oscillator(const Eigen::MatrixXcd& rho0, const OscillatorLindbladSpec& spec,
                                               double t, const OdeConfig& config = {},
                                               double leakage_tolerance = 1e-8);

// |zeta, eta0><eta0, zeta| with zeta = r e^{i Phi}, from matrix exponentials on
// work_dim Fock states, truncated to cutoff x cutoff.
Eigen::MatrixXcd squeezed_coherent_density_expm(double r, double Phi, std::complex<double> eta0, int cutoff,
                                                int work_dim = 120);

// Per-phi adaptive quadrature of ((2j+1)/4pi) int_0^pi sin(theta) Q(theta, phi) dtheta.
PhaseDistribution phase_dist_by_quadrature(const DickeDensityMatrix& rho, const PhaseGrid& grid,
                                           double tol = 1e-13);

// Adaptive quadrature over omega of the continuum, Ohmic form of gamma(t),
// with coth -> 1 (T = 0) or 2T/omega (high T).
double gamma_by_quadrature(double t, const QndBathSpec& spec);

// exp(-i (pi/2) J_y) on the spin-j representation, Dicke index order.
Eigen::MatrixXd wigner_d_half_pi_expm(HalfInteger j);

// exp((zeta* a^2 - zeta a^+2)/2) on a dim-dimensional Fock space.
Eigen::MatrixXcd squeeze_operator_expm(double r, double phi, int dim);

// (1/2) sum |eigenvalues of (a - b)|.
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

} // namespace phasediff::oracle
