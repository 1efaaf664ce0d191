// families.hpp: named distribution generators over flat parameter sets, used
// by figure scenarios and the generic sweep.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "phasediff/kernels.hpp"
#include "phasediff/phase_grid.hpp"
#include "phasediff/run_config.hpp"

namespace phasediff {

struct Numerics {
    PhaseGrid grid{720};
    int cutoff = 160;
    Execution exec = Execution::Parallel;
};

struct Family {
    std::string name;
    std::string description;
    ParamSet defaults;  // the complete key set
    std::function<PhaseDistribution(const ParamSet&, const Numerics&)> distribution;
    // Excited-level population p(1/2, t); empty for families without one.
    std::function<double(const ParamSet&)> population;
};

const std::vector<Family>& families();

// Throws ConfigError for an unknown name.
const Family& find_family(const std::string& name);

// defaults overlaid with overrides; throws ConfigError on a key the family does not have.
ParamSet resolve_params(const Family& family, const ParamSet& overrides);

} // namespace phasediff
