#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "phasediff/errors.hpp"
#include "phasediff/phase_stats.hpp"

using namespace phasediff;

namespace {
constexpr double kPi = std::numbers::pi;

PhaseDistribution wrapped_gaussian(double sigma, double mean, const PhaseGrid& grid)
{
    return tabulate(grid, [&](double phi) {
        double s = 0.0;
        for (int w = -10; w <= 10; ++w) {
            const double x = phi - mean + 2.0 * kPi * w;
            s += std::exp(-x * x / (2.0 * sigma * sigma));
        }
        return s / (sigma * std::sqrt(2.0 * kPi));
    });
}
}

TEST_CASE("uniform distribution has unit dispersion")
{
    const PhaseGrid grid(720);
    const auto p = tabulate(grid, [](double) { return 1.0 / (2.0 * kPi); });
    CHECK(integrate_distribution(p) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(first_moment(p)) < 1e-15);
    CHECK(dispersion(p) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("single harmonic")
{
    const PhaseGrid grid(720);
    for (double a : {0.0, 0.3, 1.0}) {
        const auto p = tabulate(grid, [&](double phi) { return (1.0 + a * std::cos(phi - 0.8)) / (2.0 * kPi); });
        CHECK(dispersion(p) == doctest::Approx(dispersion_single_harmonic(a)).epsilon(1e-14));
        if (a > 0.0) {
            CHECK(std::arg(first_moment(p)) == doctest::Approx(-0.8));
        }
    }
    CHECK(dispersion_single_harmonic(1.0) == 0.75);
}

TEST_CASE("wrapped gaussian")
{
    for (double sigma : {0.1, 0.01}) {
        const PhaseGrid fine(sigma < 0.05 ? 7200 : 720);
        const auto p = wrapped_gaussian(sigma, 1.0, fine);
        CHECK(dispersion(p) == doctest::Approx(1.0 - std::exp(-sigma * sigma)).epsilon(1e-8));
    }
}

TEST_CASE("dispersion stays in [0, 1]")
{
    const PhaseGrid grid(360);
    for (double sigma : {0.05, 0.3, 1.0, 3.0}) {
        const double d = dispersion(wrapped_gaussian(sigma, 2.0, grid));
        CHECK(d >= 0.0);
        CHECK(d <= 1.0 + 1e-15);
    }
}

TEST_CASE("unnormalized input is rejected")
{
    const PhaseGrid grid(360);
    const auto p = tabulate(grid, [](double) { return 1.0; });
    CHECK_THROWS_AS(dispersion(p), DomainError);
    const auto q = tabulate(grid, [](double) { return 1.0 / (2.0 * kPi) * (1.0 + 1e-9); });
    CHECK_NOTHROW(dispersion(q));
    CHECK_THROWS_AS(dispersion(q, 1e-12), DomainError);
}

TEST_CASE("linspace")
{
    const auto v = linspace(-2.0, 2.0, 5);
    REQUIRE(v.size() == 5);
    CHECK(v.front() == -2.0);
    CHECK(v.back() == 2.0);
    CHECK(v[2] == doctest::Approx(0.0).scale(1.0));
    CHECK(linspace(3.0, 3.0, 1) == std::vector<double>{3.0});
    CHECK_THROWS(linspace(0.0, 1.0, 0));
}

TEST_CASE("sweeps keep input order in both execution modes")
{
    const PhaseGrid grid(360);
    const std::vector<double> sigmas{1.0, 0.1, 0.5, 0.02, 2.0};
    auto family = [&](double s) { return wrapped_gaussian(s, 0.0, grid); };
    const auto par = dispersion_sweep("sigma", sigmas, family);
    const auto ser = dispersion_sweep("sigma", sigmas, family, Execution::Serial);
    CHECK(par.parameter_name == "sigma");
    REQUIRE(par.points.size() == sigmas.size());
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        CHECK(par.points[i].parameter == sigmas[i]);
        CHECK(par.points[i].D == ser.points[i].D);
        CHECK(par.points[i].D == doctest::Approx(1.0 - std::exp(-sigmas[i] * sigmas[i])).epsilon(1e-9));
    }
}

TEST_CASE("sweep failures propagate")
{
    const PhaseGrid grid(90);
    auto family = [&](double s) {
        if (s > 1.5) {
            throw DomainError("out of range");
        }
        return tabulate(grid, [](double) { return 1.0 / (2.0 * kPi); });
    };
    CHECK_THROWS_AS(dispersion_sweep("x", linspace(0.0, 2.0, 9), family), DomainError);
}
