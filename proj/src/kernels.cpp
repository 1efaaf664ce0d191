#include "phasediff/kernels.hpp"

#include <complex>

namespace phasediff {

namespace {

std::vector<double> fourier_sum_serial(const Eigen::MatrixXcd& x, const PhaseGrid& grid)
{
    const Eigen::Index n = x.rows();
    std::vector<double> out(static_cast<std::size_t>(grid.count));
    std::vector<std::complex<double>> phase(static_cast<std::size_t>(n));
    for (int k = 0; k < grid.count; ++k) {
        const double phi = grid.angle(k);
        for (Eigen::Index a = 0; a < n; ++a) {
            phase[static_cast<std::size_t>(a)] = std::polar(1.0, static_cast<double>(a) * phi);
        }
        std::complex<double> total{0.0, 0.0};
        for (Eigen::Index a = 0; a < n; ++a) {
            for (Eigen::Index b = 0; b < n; ++b) {
                total += x(a, b) * phase[static_cast<std::size_t>(a)] *
                         std::conj(phase[static_cast<std::size_t>(b)]);
            }
        }
        out[static_cast<std::size_t>(k)] = total.real();
    }
    return out;
}

std::vector<double> fourier_sum_parallel(const Eigen::MatrixXcd& x, const PhaseGrid& grid)
{
    const Eigen::Index n = x.rows();
    double trace = 0.0;
    for (Eigen::Index a = 0; a < n; ++a) {
        trace += x(a, a).real();
    }
    std::vector<std::complex<double>> diag_sum(static_cast<std::size_t>(n), {0.0, 0.0});
    for (Eigen::Index d = 1; d < n; ++d) {
        std::complex<double> s{0.0, 0.0};
        for (Eigen::Index b = 0; b + d < n; ++b) {
            s += x(b + d, b);
        }
        diag_sum[static_cast<std::size_t>(d)] = s;
    }

    std::vector<double> out(static_cast<std::size_t>(grid.count));
#pragma omp parallel for schedule(static)
    for (int k = 0; k < grid.count; ++k) {
        const std::complex<double> step = std::polar(1.0, grid.angle(k));
        std::complex<double> rot = step;
        std::complex<double> acc{0.0, 0.0};
        for (Eigen::Index d = 1; d < n; ++d) {
            acc += diag_sum[static_cast<std::size_t>(d)] * rot;
            // Re-anchor the running rotation so rounding does not drift over long diagonals.
            rot = (d % 32 == 31) ? std::polar(1.0, grid.angle(k) * static_cast<double>(d + 1)) : rot * step;
        }
        out[static_cast<std::size_t>(k)] = trace + 2.0 * acc.real();
    }
    return out;
}

} // namespace

std::vector<double> hermitian_fourier_sum(const Eigen::MatrixXcd& x, const PhaseGrid& grid, Execution exec)
{
    return exec == Execution::Serial ? fourier_sum_serial(x, grid) : fourier_sum_parallel(x, grid);
}

} // namespace phasediff
