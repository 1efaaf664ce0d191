// phase_grid.hpp: uniform angle grids and sampled phase distributions

#pragma once

#include <numbers>
#include <vector>

namespace phasediff {

// Uniform grid phi_k = 2 pi k / count, k = 0..count-1, covering [0, 2 pi).
struct PhaseGrid {
    int count = 720;

    explicit PhaseGrid(int n = 720);

    double step() const { return 2.0 * std::numbers::pi / count; }
    double angle(int k) const { return step() * k; }
    std::vector<double> angles() const;
};

// A phase distribution sampled on a PhaseGrid; values[k] = P(grid.angle(k)).
struct PhaseDistribution {
    PhaseGrid grid;
    std::vector<double> values;

    PhaseDistribution() : grid(720) {}
    explicit PhaseDistribution(const PhaseGrid& g) : grid(g), values(static_cast<std::size_t>(g.count), 0.0) {}
};

template <class F>
PhaseDistribution tabulate(const PhaseGrid& grid, F&& f)
{
    PhaseDistribution p(grid);
    for (int k = 0; k < grid.count; ++k) {
        p.values[static_cast<std::size_t>(k)] = f(grid.angle(k));
    }
    return p;
}

} // namespace phasediff
