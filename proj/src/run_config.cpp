#include "phasediff/run_config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace phasediff {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(const std::string& key, std::string_view text)
{
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError("value of '" + key + "' is not a real number: '" + std::string(text) + "'");
    }
    return value;
}

int parse_int(const std::string& key, std::string_view text)
{
    int value = 0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError("value of '" + key + "' is not an integer: '" + std::string(text) + "'");
    }
    return value;
}

bool valid_key(std::string_view key)
{
    if (key.empty()) {
        return false;
    }
    for (char c : key) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                        c == '.';
        if (!ok) {
            return false;
        }
    }
    return true;
}

} // namespace

std::string format_real(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void apply_assignment(RunConfig& config, const std::string& key, const std::string& value)
{
    if (!valid_key(key)) {
        throw ConfigError("malformed key '" + key + "'");
    }
    if (key == "scenario") {
        config.scenario = value;
    } else if (key == "out") {
        config.out = value;
    } else if (key == "grid") {
        config.grid = parse_int(key, value);
        if (config.grid < 3) {
            throw ConfigError("grid must be at least 3");
        }
    } else if (key == "cutoff") {
        config.cutoff = parse_int(key, value);
        if (config.cutoff < 2) {
            throw ConfigError("cutoff must be at least 2");
        }
    } else if (key == "family") {
        config.family = value;
    } else if (key == "quantity") {
        if (value != "dispersion" && value != "distribution") {
            throw ConfigError("quantity must be 'dispersion' or 'distribution'");
        }
        config.quantity = value;
    } else if (key == "sweep.param") {
        config.sweep_param = value;
    } else if (key == "sweep.from") {
        config.sweep_from = parse_real(key, value);
    } else if (key == "sweep.to") {
        config.sweep_to = parse_real(key, value);
    } else if (key == "sweep.points") {
        config.sweep_points = parse_int(key, value);
        if (config.sweep_points < 1) {
            throw ConfigError("sweep.points must be positive");
        }
    } else if (key.starts_with("sweep.")) {
        throw ConfigError("unknown key '" + key + "'");
    } else {
        config.params[key] = parse_real(key, value);
    }
}

void apply_assignment(RunConfig& config, std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError("expected key=value, got '" + std::string(assignment) + "'");
    }
    apply_assignment(config, std::string(trim(assignment.substr(0, eq))), std::string(trim(assignment.substr(eq + 1))));
}

std::string serialize(const RunConfig& config)
{
    std::ostringstream os;
    os << "scenario = " << config.scenario << '\n';
    os << "out = " << config.out << '\n';
    os << "grid = " << config.grid << '\n';
    os << "cutoff = " << config.cutoff << '\n';
    if (!config.family.empty()) {
        os << "family = " << config.family << '\n';
    }
    os << "quantity = " << config.quantity << '\n';
    if (!config.sweep_param.empty()) {
        os << "sweep.param = " << config.sweep_param << '\n';
    }
    os << "sweep.from = " << format_real(config.sweep_from) << '\n';
    os << "sweep.to = " << format_real(config.sweep_to) << '\n';
    if (config.sweep_points > 0) {
        os << "sweep.points = " << config.sweep_points << '\n';
    }
    for (const auto& [key, value] : config.params) {
        os << key << " = " << format_real(value) << '\n';
    }
    return os.str();
}

RunConfig parse_config(std::string_view text, RunConfig base)
{
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        try {
            apply_assignment(base, line);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

} // namespace phasediff
