// scenarios.hpp: the figure scenarios and the generic sweep, each producing one
// CSV document.
//
// A scenario has shared parameters (overridable from the run configuration)
// and per-curve parameters (fixed; they define the curves).

#pragma once

#include <string>
#include <vector>

#include "phasediff/csv.hpp"
#include "phasediff/families.hpp"
#include "phasediff/run_config.hpp"

namespace phasediff {

enum class ScenarioKind {
    Distribution,  // P(phi) per curve on the phase grid, closing point phi = 2 pi included
    Dispersion,    // D per curve over a sweep axis
    Population,    // p(1/2, t) per curve over a time axis
};

struct Curve {
    std::string label;
    std::string family;
    ParamSet params;
};

struct Scenario {
    std::string id;
    std::string title;
    ScenarioKind kind = ScenarioKind::Distribution;
    ParamSet shared;
    std::vector<Curve> curves;
    std::string axis = "phi";
    double from = 0.0;
    double to = 0.0;
    int points = 0;
    std::vector<std::string> notes;  // chosen defaults, echoed into the CSV metadata
};

const std::vector<Scenario>& scenarios();

// Throws ConfigError for an unknown id.
const Scenario& find_scenario(const std::string& id);

// "fig4" names both panels; every other id names itself.
std::vector<std::string> expand_figure_id(const std::string& id);

// Shared parameters, grid, cutoff and sweep range at their defaults.
RunConfig default_config(const Scenario& scenario);

// Parameters of one curve after applying config.params to the shared set.
ParamSet curve_params(const Scenario& scenario, const Curve& curve, const RunConfig& config);

// Throws ConfigError on parameters outside scenario.shared.
CsvDocument run_figure(const Scenario& scenario, const RunConfig& config);

// Dispersion or distribution of config.family swept over config.sweep_param.
CsvDocument run_sweep(const RunConfig& config);

} // namespace phasediff
