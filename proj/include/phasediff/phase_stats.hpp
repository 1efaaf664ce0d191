// phase_stats.hpp: normalization audit, dispersion and dispersion sweeps.

#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "phasediff/kernels.hpp"
#include "phasediff/phase_grid.hpp"

namespace phasediff {

// Trapezoid rule over the periodic grid (equal to the rectangle rule).
double integrate_distribution(const PhaseDistribution& p);

// int e^{-i phi} P(phi) dphi on the grid.
std::complex<double> first_moment(const PhaseDistribution& p);

// D = 1 - |first moment|^2. Throws DomainError when |integral - 1| > norm_tol.
double dispersion(const PhaseDistribution& p, double norm_tol = 1e-6);

// Analytic D of (1/2pi)(1 + A cos(phi - chi)): 1 - A^2/4.
double dispersion_single_harmonic(double amplitude);

struct DispersionPoint {
    double parameter = 0.0;
    double D = 0.0;
};

struct DispersionCurve {
    std::string parameter_name;
    std::vector<DispersionPoint> points;
};

using DistributionFamily = std::function<PhaseDistribution(double)>;

// D for every parameter value, in input order.
DispersionCurve dispersion_sweep(const std::string& parameter_name, const std::vector<double>& values,
                                 const DistributionFamily& family, Execution exec = Execution::Parallel);

// n evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int n);

} // namespace phasediff
