#include "phasediff/phase_grid.hpp"

#include <stdexcept>

namespace phasediff {

PhaseGrid::PhaseGrid(int n) : count(n)
{
    if (n < 3) {
        throw std::invalid_argument("phase grid needs at least 3 points");
    }
}

std::vector<double> PhaseGrid::angles() const
{
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        out[static_cast<std::size_t>(k)] = angle(k);
    }
    return out;
}

} // namespace phasediff
