#include "phasediff/phase_stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "phasediff/errors.hpp"

namespace phasediff {

double integrate_distribution(const PhaseDistribution& p)
{
    double sum = 0.0;
    for (double v : p.values) {
        sum += v;
    }
    return sum * p.grid.step();
}

std::complex<double> first_moment(const PhaseDistribution& p)
{
    std::complex<double> sum{0.0, 0.0};
    for (int k = 0; k < p.grid.count; ++k) {
        sum += p.values[static_cast<std::size_t>(k)] * std::polar(1.0, -p.grid.angle(k));
    }
    return sum * p.grid.step();
}

double dispersion(const PhaseDistribution& p, double norm_tol)
{
    const double norm = integrate_distribution(p);
    if (std::abs(norm - 1.0) > norm_tol) {
        throw DomainError("dispersion: distribution integrates to " + std::to_string(norm));
    }
    return 1.0 - std::norm(first_moment(p));
}

double dispersion_single_harmonic(double amplitude)
{
    return 1.0 - 0.25 * amplitude * amplitude;
}

DispersionCurve dispersion_sweep(const std::string& parameter_name, const std::vector<double>& values,
                                 const DistributionFamily& family, Execution exec)
{
    DispersionCurve curve;
    curve.parameter_name = parameter_name;
    const std::vector<double> d = parallel_map<double>(
        values.size(), [&](std::size_t i) { return dispersion(family(values[i])); }, exec);
    curve.points.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        curve.points.push_back({values[i], d[i]});
    }
    return curve;
}

std::vector<double> linspace(double lo, double hi, int n)
{
    if (n < 1) {
        throw std::invalid_argument("linspace: need at least one point");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (int i = 0; i < n; ++i) {
        // Endpoint-exact; avoids accumulated step error.
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

} // namespace phasediff
