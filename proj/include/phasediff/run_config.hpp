// run_config.hpp: flat key = value run configuration shared by the CLI
// subcommands.
//
// Reserved keys: scenario, out, grid, cutoff, family, quantity, sweep.param,
// sweep.from, sweep.to, sweep.points. Every other key is a model parameter and
// is checked against the scenario or family when the run is resolved.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace phasediff {

// Bad configuration text, key or value. The CLI maps it to a usage error.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using ParamSet = std::map<std::string, double>;

struct RunConfig {
    std::string scenario = "custom";
    std::string out = ".";
    int grid = 720;
    int cutoff = 160;

    // sweep subcommand only
    std::string family;
    std::string quantity = "dispersion";  // or "distribution"
    std::string sweep_param;
    double sweep_from = 0.0;
    double sweep_to = 0.0;
    int sweep_points = 0;

    ParamSet params;

    bool operator==(const RunConfig&) const = default;
};

// Sets one key; numeric values must parse completely.
void apply_assignment(RunConfig& config, const std::string& key, const std::string& value);

// "key=value" with surrounding whitespace allowed around both parts.
void apply_assignment(RunConfig& config, std::string_view assignment);

// One "key = value" per line, reserved keys first, reals at 17 significant digits.
std::string serialize(const RunConfig& config);

// Blank lines and lines starting with '#' are ignored. Starts from `base`.
RunConfig parse_config(std::string_view text, RunConfig base = {});

RunConfig load_config_file(const std::string& path, RunConfig base = {});

// %.17g
std::string format_real(double value);

} // namespace phasediff
