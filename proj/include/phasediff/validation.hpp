// validation.hpp: oracle and invariant checks behind the `validate` command.
//
// Each measure_* function returns the largest deviation it observed; the
// report compares it with the check's tolerance.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace phasediff {

struct CheckResult {
    std::string name;
    double tolerance = 0.0;
    double deviation = 0.0;
    bool passed = false;
    std::string detail;
};

struct ValidationOptions {
    std::optional<double> tolerance_override;  // replaces every check's tolerance
    bool inject_qubit_m_sign_flip = false;     // closed form sees -M, the ODE sees M
};

// Max relative |gamma_qnd - quadrature| over both regimes, r in {0,1,2},
// a in {0, 0.05}, t in {0.2, 1, 5}.
double measure_gamma_kernel();

// Max element-wise |closed form - ODE| for the qubit over six bath settings and
// t in [0, 5].
double measure_qubit_oracle(bool flip_m_sign = false);

// Trace distance between the GSCS mixture and the ODE at Fock cutoff 40:
// thermal == false is the squeezed T = 0 set, true the r = 0 thermal set.
double measure_oscillator_oracle(bool thermal);

// Max |direct mixture sum - (1/2pi)<theta|rho|theta>| at the fig5 dissipative parameters.
double measure_oscillator_two_paths();

// Max |Beta closed form - per-phi quadrature|: j = 1/2 coherent or j = 5 squeezed.
double measure_atomic_quadrature(bool ten_atoms);

// Max |single-purpose closed form - Beta pipeline on the evolved state| over the
// QND one- and two-atom forms and the dissipative qubit forms.
double measure_closed_forms_vs_pipeline();

// Max deviation of the dissipative qubit forms at gamma0 = 0 from their
// unitary and QND counterparts.
double measure_qubit_reductions();

// Max |squeezed coherent form at r1 -> 0 - coherent form|, both through the
// r1 == 0 dispatch and through the general path at r1 = 1e-12.
double measure_oscillator_reduction();

// Max |wigner_d_half_pi_matrix - expm| and unitarity residual for j <= 10.
double measure_wigner_d();

// Max |squeeze_matrix - expm| on a 60 x 60 block (r1 = 0.5 and 1), exact
// parity zeros, and the unitarity residual of 60 rows against 240 columns at r1 = 0.5.
double measure_squeeze_matrix();

// Max |integral - 1| over the closed-form qubit and QND distributions at the
// figure parameter sets.
double measure_closed_form_normalization();

std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

// One line per check: status, name, tolerance, deviation.
std::string format_report(const std::vector<CheckResult>& results);

} // namespace phasediff
