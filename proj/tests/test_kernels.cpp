#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "phasediff/kernels.hpp"

using namespace phasediff;

namespace {
Eigen::MatrixXcd random_hermitian(int n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd x(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            x(a, b) = {g(rng), g(rng)};
        }
    }
    return (x + x.adjoint()) / 2.0;
}
}

TEST_CASE("phase grid")
{
    const PhaseGrid g(8);
    CHECK(g.step() == doctest::Approx(std::numbers::pi / 4));
    CHECK(g.angles().size() == 8);
    CHECK(g.angle(4) == doctest::Approx(std::numbers::pi));
    CHECK_THROWS(PhaseGrid(0));
}

TEST_CASE("parallel fourier sum matches the serial double sum")
{
    for (int n : {1, 2, 7, 40, 100}) {
        const Eigen::MatrixXcd x = random_hermitian(n, 17u + static_cast<unsigned>(n));
        const PhaseGrid grid(720);
        const auto serial = hermitian_fourier_sum(x, grid, Execution::Serial);
        const auto parallel = hermitian_fourier_sum(x, grid, Execution::Parallel);
        REQUIRE(serial.size() == 720);
        double worst = 0.0;
        for (std::size_t k = 0; k < serial.size(); ++k) {
            worst = std::max(worst, std::abs(serial[k] - parallel[k]));
        }
        CHECK(worst < 1e-11 * std::max(1.0, x.cwiseAbs().sum()));
    }
}

TEST_CASE("fourier sum of a single coherence")
{
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(3, 3);
    x(2, 0) = {0.5, 0.0};
    x(0, 2) = {0.5, 0.0};
    const PhaseGrid grid(64);
    const auto f = hermitian_fourier_sum(x, grid);
    for (int k = 0; k < grid.count; ++k) {
        CHECK(f[static_cast<std::size_t>(k)] == doctest::Approx(std::cos(2.0 * grid.angle(k))).scale(1.0));
    }
}

TEST_CASE("parallel fourier sum is deterministic")
{
    const Eigen::MatrixXcd x = random_hermitian(60, 5u);
    const PhaseGrid grid(360);
    CHECK(hermitian_fourier_sum(x, grid) == hermitian_fourier_sum(x, grid));
}

TEST_CASE("parallel map")
{
    const auto squares = parallel_map<int>(100, [](std::size_t i) { return static_cast<int>(i * i); });
    for (std::size_t i = 0; i < squares.size(); ++i) {
        CHECK(squares[i] == static_cast<int>(i * i));
    }
    CHECK(parallel_map<int>(0, [](std::size_t) { return 1; }).empty());
    const auto serial = parallel_map<double>(5, [](std::size_t i) { return 0.5 * i; }, Execution::Serial);
    CHECK(serial.back() == 2.0);
}

TEST_CASE("parallel map rethrows on the calling thread")
{
    auto fails = [](std::size_t i) -> int {
        if (i == 37) {
            throw std::runtime_error("boom");
        }
        return 0;
    };
    CHECK_THROWS_WITH_AS(parallel_map<int>(64, fails), "boom", std::runtime_error);
    CHECK_THROWS_AS(parallel_map<int>(64, fails, Execution::Serial), std::runtime_error);
}
