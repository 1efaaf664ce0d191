// kernels.hpp: the hot loops shared by every phase distribution, in a serial
// reference form and an OpenMP form.
//
// Both forms evaluate the same finite sum; the serial one is the literal double
// sum and is kept as the reference the parallel one is tested against.

#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include <Eigen/Dense>

#include "phasediff/phase_grid.hpp"

namespace phasediff {

enum class Execution { Serial, Parallel };

// f(phi) = sum_{a,b} X(a,b) exp(i (a - b) phi) on every grid angle.
// X must be Hermitian, so f is real.
//
// Serial: O(grid * n^2) literal double sum.
// Parallel: diagonal sums s_d = sum_b X(b+d, b) once, then
//           f = sum_a X(a,a) + 2 Re sum_{d>0} s_d e^{i d phi}, threads over phi.
std::vector<double> hermitian_fourier_sum(const Eigen::MatrixXcd& x, const PhaseGrid& grid,
                                          Execution exec = Execution::Parallel);

// out[i] = fn(i) for i in [0, n). Exceptions thrown inside the parallel region
// are captured and the first one is rethrown on the calling thread.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& fn, Execution exec = Execution::Parallel)
{
    std::vector<T> out(n);
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = fn(i);
        }
        return out;
    }
    std::exception_ptr failure;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(phasediff_parallel_map_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

} // namespace phasediff
