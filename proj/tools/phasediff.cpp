// phasediff: figure data, parameter sweeps and the validation suite.
//
// Exit codes: 0 success, 1 validation failure, 2 usage error (bad arguments,
// configuration, parameter domain or truncation failure).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phasediff/csv.hpp"
#include "phasediff/errors.hpp"
#include "phasediff/run_config.hpp"
#include "phasediff/scenarios.hpp"
#include "phasediff/validation.hpp"

namespace {

using namespace phasediff;

constexpr int kUsageError = 2;

struct CommonFlags {
    std::string config_file;
    std::optional<std::string> out;
    std::optional<int> grid;
    std::optional<int> cutoff;
    std::vector<std::string> sets;
    bool plot_script = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, const std::string& out_help)
{
    cmd->add_option("--config", flags.config_file, "flat key = value configuration file");
    cmd->add_option("--out", flags.out, out_help);
    cmd->add_option("--grid", flags.grid, "phase grid points (default 720)");
    cmd->add_option("--cutoff", flags.cutoff, "Fock cutoff for oscillator families (default 160)");
    cmd->add_option("--set", flags.sets, "parameter override key=value (repeatable)");
    cmd->add_flag("--plot-script", flags.plot_script, "also write a matplotlib script next to each CSV");
}

// File values, then explicit flags, then --set assignments.
RunConfig layered(RunConfig base, const CommonFlags& flags)
{
    if (!flags.config_file.empty()) {
        base = load_config_file(flags.config_file, std::move(base));
    }
    if (flags.out) {
        base.out = *flags.out;
    }
    if (flags.grid) {
        apply_assignment(base, "grid", std::to_string(*flags.grid));
    }
    if (flags.cutoff) {
        apply_assignment(base, "cutoff", std::to_string(*flags.cutoff));
    }
    for (const auto& s : flags.sets) {
        apply_assignment(base, std::string_view(s));
    }
    return base;
}

void emit(const CsvDocument& doc, const std::string& path, bool with_script)
{
    if (path == "-") {
        write_csv(std::cout, doc);
        return;
    }
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::filesystem::create_directories(p.parent_path());
    }
    write_csv_file(path, doc);
    std::cerr << "wrote " << path << '\n';
    if (with_script) {
        const std::string script = p.parent_path() / (p.stem().string() + "_plot.py");
        std::ofstream(script) << plot_script(p.filename().string(), doc);
        std::cerr << "wrote " << script << '\n';
    }
}

int run_figures(const std::string& id, const CommonFlags& flags)
{
    std::vector<std::string> ids;
    if (id == "all") {
        for (const auto& s : scenarios()) {
            ids.push_back(s.id);
        }
    } else {
        ids = expand_figure_id(id);
    }
    for (const auto& one : ids) {
        const Scenario& scenario = find_scenario(one);
        const RunConfig config = layered(default_config(scenario), flags);
        const CsvDocument doc = run_figure(scenario, config);
        emit(doc, config.out == "-" ? "-" : (std::filesystem::path(config.out) / (one + ".csv")).string(),
             flags.plot_script);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quantum phase distributions of two-level atoms and oscillators under QND and dissipative baths"};
    app.require_subcommand(1);

    CommonFlags figure_flags;
    std::string figure_id;
    auto* figure = app.add_subcommand("figure", "write the data of one figure (fig1..fig10, fig3b, fig4a/b, all)");
    figure->add_option("id", figure_id, "figure id")->required();
    add_common(figure, figure_flags, "output directory, or - for stdout (default .)");

    CommonFlags sweep_flags;
    std::optional<std::string> family, param, quantity;
    std::optional<double> from, to;
    std::optional<int> points;
    auto* sweep = app.add_subcommand("sweep", "dispersion or distribution of one family over one parameter");
    sweep->add_option("--family", family, "distribution family");
    sweep->add_option("--param", param, "swept parameter");
    sweep->add_option("--from", from, "first value");
    sweep->add_option("--to", to, "last value");
    sweep->add_option("--points", points, "number of values");
    sweep->add_option("--quantity", quantity, "dispersion (default) or distribution");
    add_common(sweep, sweep_flags, "output CSV path, or - for stdout (default -)");

    std::optional<double> tolerance;
    std::string fault;
    auto* validate = app.add_subcommand("validate", "run the oracle and invariant suite");
    validate->add_option("--tolerance", tolerance, "replace every check's tolerance");
    validate->add_option("--inject-fault", fault, "qubit-m-sign: flip the sign of M in the closed form only")
        ->check(CLI::IsMember({"qubit-m-sign"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsageError;
    }

    try {
        if (*figure) {
            return run_figures(figure_id, figure_flags);
        }
        if (*sweep) {
            RunConfig base;
            base.scenario = "sweep";
            base.out = "-";
            RunConfig config = layered(base, sweep_flags);
            if (family) {
                config.family = *family;
            }
            if (param) {
                config.sweep_param = *param;
            }
            if (from) {
                config.sweep_from = *from;
            }
            if (to) {
                config.sweep_to = *to;
            }
            if (points) {
                apply_assignment(config, "sweep.points", std::to_string(*points));
            }
            if (quantity) {
                apply_assignment(config, "quantity", *quantity);
            }
            emit(run_sweep(config), config.out, sweep_flags.plot_script);
            return 0;
        }
        if (*validate) {
            ValidationOptions options;
            options.tolerance_override = tolerance;
            options.inject_qubit_m_sign_flip = fault == "qubit-m-sign";
            const auto results = run_validation(options);
            std::cout << format_report(results);
            for (const auto& r : results) {
                if (!r.passed) {
                    return 1;
                }
            }
            return 0;
        }
    } catch (const TruncationError& e) {
        std::cerr << "error: truncation failure at cutoff " << e.cutoff() << ": " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
