// qnd_phase.hpp: pure-dephasing evolution and phase / number distributions for
// N two-level atoms (spin j) and for a harmonic oscillator.
//
// Dicke index convention: row/column k <-> m = -j + k.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "phasediff/kernels.hpp"
#include "phasediff/phase_grid.hpp"
#include "phasediff/special_functions.hpp"

namespace phasediff {

// Atomic coherent state |alpha', beta'>, alpha' in [0, pi], beta' in [0, 2 pi).
struct AtomicCoherentParams {
    double alpha_p = 0.0;
    double beta_p = 0.0;
};

// Atomic squeezed state A_p exp(Theta J_z) exp(-i pi/2 J_y) |j, p>.
struct AtomicSqueezedParams {
    HalfInteger j;
    HalfInteger p;
    double Theta = 0.0;
};

// Theta = (1/2) ln tanh(2 zeta) for zeta > 0.
double theta_from_zeta(double zeta);

struct DickeDensityMatrix {
    HalfInteger j;
    Eigen::MatrixXcd elements;

    DickeDensityMatrix() = default;
    DickeDensityMatrix(HalfInteger spin, Eigen::MatrixXcd rho);

    int dim() const { return j.twice + 1; }
    static int index(HalfInteger j, HalfInteger m) { return (m.twice + j.twice) / 2; }

    // Throws ConsistencyError unless Hermitian, unit trace and PSD within tolerance.
    void validate(double hermitian_tol = 1e-12, double trace_tol = 1e-12, double psd_tol = 1e-10) const;
};

// rho_mn * e^{-i w (m-n) t} e^{i w^2 (m^2-n^2) eta} e^{-w^2 (m-n)^2 gamma}.
DickeDensityMatrix qnd_evolve(const DickeDensityMatrix& rho0, double omega, double t, double eta_t, double gamma_t);

DickeDensityMatrix atomic_coherent_density(const AtomicCoherentParams& params, HalfInteger j);
DickeDensityMatrix atomic_squeezed_density(const AtomicSqueezedParams& params);

// P(phi) = ((2j+1)/4pi) sum rho_nm e^{i(n-m)phi} sqrt(C(2j,j+n) C(2j,j+m)) 2 B(j+(n+m)/2+1, j-(n+m)/2+1).
PhaseDistribution phase_distribution_atomic(const DickeDensityMatrix& rho, const PhaseGrid& grid,
                                            Execution exec = Execution::Parallel);

// Single two-level atom, atomic coherent start.
PhaseDistribution phase_dist_coherent_halfspin(const AtomicCoherentParams& params, double omega, double t,
                                               double gamma_t, const PhaseGrid& grid);

// Single two-level atom, atomic squeezed start with p = p_sign/2 (p_sign = +1 or -1).
PhaseDistribution phase_dist_squeezed_halfspin(double Theta, int p_sign, double omega, double t, double gamma_t,
                                               const PhaseGrid& grid);

// Two two-level atoms (j = 1), p in {+1, -1, 0}.
PhaseDistribution phase_dist_two_atoms(double Theta, int p, double omega, double t, double eta_t, double gamma_t,
                                       const PhaseGrid& grid);

// p(m) for m = -j..j (Dicke index order). Invariant under qnd_evolve.
std::vector<double> number_distribution(const AtomicCoherentParams& params, HalfInteger j);
std::vector<double> number_distribution(const AtomicSqueezedParams& params);

// Truncation control for the oscillator sums.
struct FockTruncation {
    int cutoff = 160;
    double tail_tolerance = 1e-12;
};

// Fock density matrices (cutoff x cutoff) after QND evolution; throw
// TruncationError when the norm outside the cutoff exceeds tail_tolerance.
Eigen::MatrixXcd osc_coherent_density(double alpha_mag, double theta0, double omega, double t, double eta_t,
                                      double gamma_t, const FockTruncation& trunc);
Eigen::MatrixXcd osc_squeezed_density(double r1, double psi, double alpha_mag, double theta0, double omega, double t,
                                      double eta_t, double gamma_t, const FockTruncation& trunc);

// (1/2pi) sum rho_mn e^{i(n-m) theta} for a Fock density matrix.
PhaseDistribution phase_distribution_fock(const Eigen::MatrixXcd& rho, const PhaseGrid& grid,
                                          Execution exec = Execution::Parallel);

PhaseDistribution phase_dist_osc_coherent(double alpha_mag, double theta0, double omega, double t, double eta_t,
                                          double gamma_t, const FockTruncation& trunc, const PhaseGrid& grid,
                                          Execution exec = Execution::Parallel);

// r1 == 0 dispatches to phase_dist_osc_coherent.
PhaseDistribution phase_dist_osc_squeezed(double r1, double psi, double alpha_mag, double theta0, double omega,
                                          double t, double eta_t, double gamma_t, const FockTruncation& trunc,
                                          const PhaseGrid& grid, Execution exec = Execution::Parallel);

} // namespace phasediff
