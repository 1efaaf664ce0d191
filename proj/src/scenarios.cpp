#include "phasediff/scenarios.hpp"

#include <numbers>

#include "phasediff/kernels.hpp"
#include "phasediff/phase_stats.hpp"

namespace phasediff {

namespace {

constexpr double kPi = std::numbers::pi;

Curve curve(std::string label, std::string family, ParamSet params)
{
    return Curve{std::move(label), std::move(family), std::move(params)};
}

std::vector<Scenario> build_scenarios()
{
    std::vector<Scenario> out;
    const ParamSet ten_atoms{{"j", 5.0},  {"p", 5.0},        {"Theta", -0.01832}, {"zeta", 0.0},
                             {"omega", 1.0}, {"omega_c", 100.0}, {"a", 0.0}};

    {
        Scenario s{"fig1", "P(phi), ten atoms, atomic squeezed start, QND bath", ScenarioKind::Distribution,
                   ten_atoms, {}, "phi", 0, 0, 0, {}};
        s.shared["gamma0"] = 0.025;
        const std::string f = "qnd_atomic_squeezed";
        s.curves = {curve("unitary t=0.1", f, {{"gamma0", 0.0}, {"r", 0.0}, {"T", 0.0}, {"t", 0.1}}),
                    curve("r=1 T=0 t=0.1", f, {{"r", 1.0}, {"T", 0.0}, {"t", 0.1}}),
                    curve("r=1 T=0 t=1", f, {{"r", 1.0}, {"T", 0.0}, {"t", 1.0}}),
                    curve("r=2 T=0 t=0.1", f, {{"r", 2.0}, {"T", 0.0}, {"t", 0.1}}),
                    curve("r=1 T=300 t=0.1", f, {{"r", 1.0}, {"T", 300.0}, {"t", 0.1}})};
        s.notes = {"the r=1 T=300 curve uses t=0.1"};
        out.push_back(s);
    }
    {
        Scenario s{"fig2", "P(phi), two-level atom, atomic coherent start, dissipative bath",
                   ScenarioKind::Distribution,
                   {{"alpha_p", kPi / 4.0}, {"beta_p", kPi / 4.0}, {"gamma0", 0.25}, {"omega", 1.0},
                    {"Phi", kPi / 8.0}},
                   {}, "phi", 0, 0, 0, {}};
        const std::string f = "qubit_coherent";
        s.curves = {curve("T=0 r=0 t=0.1", f, {{"T", 0.0}, {"r", 0.0}, {"t", 0.1}}),
                    curve("T=0 r=0 t=1.5", f, {{"T", 0.0}, {"r", 0.0}, {"t", 1.5}}),
                    curve("T=300 r=0 t=0.1", f, {{"T", 300.0}, {"r", 0.0}, {"t", 0.1}}),
                    curve("T=300 r=2 t=0.1", f, {{"T", 300.0}, {"r", 2.0}, {"t", 0.1}})};
        out.push_back(s);
    }
    {
        Scenario s{"fig3", "p(1/2,t), two-level atom, atomic coherent start, dissipative bath",
                   ScenarioKind::Population,
                   {{"alpha_p", kPi / 4.0}, {"beta_p", kPi / 4.0}, {"omega", 1.0}, {"Phi", 0.0}},
                   {}, "t", 0.0, 250.0, 501, {}};
        const std::string f = "qubit_coherent";
        s.curves = {curve("T=100 gamma0=0.0025 r=0", f, {{"T", 100.0}, {"gamma0", 0.0025}, {"r", 0.0}}),
                    curve("T=0 gamma0=0.025 r=0", f, {{"T", 0.0}, {"gamma0", 0.025}, {"r", 0.0}}),
                    curve("T=0 gamma0=0.025 r=1", f, {{"T", 0.0}, {"gamma0", 0.025}, {"r", 1.0}})};
        s.notes = {"time axis 0..250 in 501 points"};
        out.push_back(s);
    }
    {
        Scenario s{"fig3b", "P(phi) at long times, two-level atom, atomic coherent start, dissipative bath",
                   ScenarioKind::Distribution,
                   {{"alpha_p", kPi / 4.0}, {"beta_p", kPi / 4.0}, {"gamma0", 0.025}, {"omega", 1.0}, {"Phi", 0.0},
                    {"r", 0.0}, {"T", 0.0}},
                   {}, "phi", 0, 0, 0, {}};
        const std::string f = "qubit_coherent";
        s.curves = {curve("t=250", f, {{"t", 250.0}}), curve("t=50", f, {{"t", 50.0}}),
                    curve("t=10", f, {{"t", 10.0}})};
        out.push_back(s);
    }
    for (const double p : {0.5, -0.5}) {
        Scenario s{p > 0 ? "fig4a" : "fig4b",
                   p > 0 ? "P(phi), two-level atom, atomic squeezed start p=1/2, dissipative bath"
                         : "P(phi), two-level atom, atomic squeezed start p=-1/2, dissipative bath",
                   ScenarioKind::Distribution,
                   {{"Theta", -0.01832}, {"p", p}, {"gamma0", 0.025}, {"omega", 1.0}, {"Phi", kPi / 8.0}},
                   {}, "phi", 0, 0, 0, {}};
        const std::string f = "qubit_squeezed";
        s.curves = {curve("T=300 t=0.1 r=0.5", f, {{"T", 300.0}, {"t", 0.1}, {"r", 0.5}}),
                    curve("T=300 t=0.1 r=0", f, {{"T", 300.0}, {"t", 0.1}, {"r", 0.0}}),
                    curve("T=0 r=0 t=0.1", f, {{"T", 0.0}, {"r", 0.0}, {"t", 0.1}}),
                    curve("T=0 r=0 t=1.5", f, {{"T", 0.0}, {"r", 0.0}, {"t", 1.5}})};
        out.push_back(s);
    }
    {
        Scenario s{"fig5", "P(theta), oscillator, squeezed coherent start, QND vs dissipative bath",
                   ScenarioKind::Distribution,
                   {{"gamma0", 0.025}, {"omega", 1.0}, {"r", 1.0}, {"T", 0.0}, {"t", 0.1}},
                   {}, "theta", 0, 0, 0, {}};
        s.curves = {curve("QND r1=1 psi=0 omega_c=100", "qnd_osc_squeezed",
                          {{"r1", 1.0}, {"psi", 0.0}, {"alpha_sq", 5.0}, {"theta0", 0.0}, {"omega_c", 100.0},
                           {"a", 0.0}}),
                    curve("dissipative r=1 Phi=0", "osc_dissipative",
                          {{"Phi", 0.0}, {"eta0_sq", 1.0}, {"eta0_phase", 0.0}})};
        s.notes = {"QND curve: |alpha|^2=5 and theta0=0 are chosen defaults",
                   "dissipative curve: |eta0|^2=1 and arg(eta0)=0 are chosen defaults"};
        out.push_back(s);
    }
    {
        Scenario s{"fig6", "D vs bath squeezing r, ten atoms, atomic squeezed start, QND bath",
                   ScenarioKind::Dispersion, ten_atoms, {}, "r", -2.0, 2.0, 81, {}};
        s.shared["gamma0"] = 0.0025;
        s.shared["t"] = 1.0;
        const std::string f = "qnd_atomic_squeezed";
        for (const double T : {0.0, 50.0, 100.0, 1000.0}) {
            s.curves.push_back(curve("T=" + format_real(T), f, {{"T", T}}));
        }
        out.push_back(s);
    }
    {
        Scenario s{"fig7", "D vs system squeezing zeta, ten atoms, atomic squeezed start, QND bath",
                   ScenarioKind::Dispersion, ten_atoms, {}, "zeta", 0.5, 2.0, 61, {}};
        s.shared["gamma0"] = 0.0025;
        s.shared["t"] = 1.0;
        s.shared["r"] = 0.0;
        const std::string f = "qnd_atomic_squeezed";
        for (const double T : {0.0, 50.0, 100.0}) {
            s.curves.push_back(curve("T=" + format_real(T), f, {{"T", T}}));
        }
        s.curves.push_back(curve("unitary gamma0=0", f, {{"gamma0", 0.0}, {"T", 0.0}}));
        s.notes = {"bath squeezing r=0 and the zeta range 0.5..2 are chosen defaults",
                   "Theta = (1/2) ln tanh(2 zeta) along the axis"};
        out.push_back(s);
    }
    {
        Scenario s{"fig8", "D vs bath squeezing r, oscillator, squeezed coherent start, QND bath",
                   ScenarioKind::Dispersion,
                   {{"r1", 0.5}, {"psi", kPi / 4.0}, {"alpha_sq", 5.0}, {"theta0", 0.0}, {"gamma0", 0.0025},
                    {"omega", 1.0}, {"omega_c", 100.0}, {"a", 0.0}, {"t", 0.1}},
                   {}, "r", -2.0, 2.0, 81, {}};
        const std::string f = "qnd_osc_squeezed";
        for (const double T : {0.0, 100.0, 1000.0}) {
            s.curves.push_back(curve("T=" + format_real(T), f, {{"T", T}}));
        }
        s.curves.push_back(curve("unitary gamma0=0", f, {{"gamma0", 0.0}, {"T", 0.0}}));
        s.notes = {"theta0=0 is a chosen default"};
        out.push_back(s);
    }
    {
        Scenario s{"fig9", "D vs bath squeezing r, two-level atom, atomic coherent start, dissipative bath",
                   ScenarioKind::Dispersion,
                   {{"alpha_p", kPi / 4.0}, {"beta_p", kPi / 4.0}, {"gamma0", 0.0025}, {"omega", 1.0},
                    {"Phi", kPi / 8.0}, {"t", 1.0}},
                   {}, "r", -2.0, 2.0, 81, {}};
        const std::string f = "qubit_coherent";
        for (const double T : {0.0, 100.0, 300.0, 1000.0}) {
            s.curves.push_back(curve("T=" + format_real(T), f, {{"T", T}}));
        }
        out.push_back(s);
    }
    {
        Scenario s{"fig10", "D vs bath squeezing r, two-level atom, atomic coherent start, QND bath",
                   ScenarioKind::Dispersion,
                   {{"j", 0.5}, {"alpha_p", kPi / 4.0}, {"beta_p", kPi / 4.0}, {"gamma0", 0.0025}, {"omega", 1.0},
                    {"omega_c", 100.0}, {"a", 0.0}, {"t", 1.0}},
                   {}, "r", -2.0, 2.0, 81, {}};
        const std::string f = "qnd_atomic_coherent";
        for (const double T : {0.0, 50.0, 100.0, 1000.0}) {
            s.curves.push_back(curve("T=" + format_real(T), f, {{"T", T}}));
        }
        out.push_back(s);
    }
    return out;
}

void add_param_metadata(CsvDocument& doc, const std::string& prefix, const ParamSet& params)
{
    for (const auto& [key, value] : params) {
        doc.metadata.emplace_back(prefix + key, format_real(value));
    }
}

std::string describe(const ParamSet& params)
{
    std::string out;
    for (const auto& [key, value] : params) {
        out += (out.empty() ? "" : " ") + key + "=" + format_real(value);
    }
    return out;
}

Numerics numerics_of(const RunConfig& config)
{
    Numerics num;
    num.grid = PhaseGrid(config.grid);
    num.cutoff = config.cutoff;
    return num;
}

// Rows phi_0..phi_{n-1} plus the closing point phi = 2 pi (a copy of phi_0).
Table distribution_table(const std::string& axis, const std::vector<std::string>& labels,
                         const std::vector<PhaseDistribution>& dists, const PhaseGrid& grid)
{
    Table table;
    table.columns.push_back(axis);
    table.columns.insert(table.columns.end(), labels.begin(), labels.end());
    for (int k = 0; k <= grid.count; ++k) {
        std::vector<double> row{k == grid.count ? 2.0 * kPi : grid.angle(k)};
        for (const auto& d : dists) {
            row.push_back(d.values[static_cast<std::size_t>(k % grid.count)]);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table axis_table(const std::string& axis, const std::vector<double>& values, const std::vector<std::string>& labels,
                 const std::vector<std::vector<double>>& columns)
{
    Table table;
    table.columns.push_back(axis);
    table.columns.insert(table.columns.end(), labels.begin(), labels.end());
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::vector<double> row{values[i]};
        for (const auto& col : columns) {
            row.push_back(col[i]);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace

const std::vector<Scenario>& scenarios()
{
    static const std::vector<Scenario> all = build_scenarios();
    return all;
}

const Scenario& find_scenario(const std::string& id)
{
    for (const auto& s : scenarios()) {
        if (s.id == id) {
            return s;
        }
    }
    throw ConfigError("unknown figure '" + id + "'");
}

std::vector<std::string> expand_figure_id(const std::string& id)
{
    if (id == "fig4") {
        return {"fig4a", "fig4b"};
    }
    find_scenario(id);
    return {id};
}

RunConfig default_config(const Scenario& scenario)
{
    RunConfig config;
    config.scenario = scenario.id;
    config.params = scenario.shared;
    if (scenario.kind != ScenarioKind::Distribution) {
        config.sweep_param = scenario.axis;
        config.sweep_from = scenario.from;
        config.sweep_to = scenario.to;
        config.sweep_points = scenario.points;
    }
    return config;
}

ParamSet curve_params(const Scenario& scenario, const Curve& curve, const RunConfig& config)
{
    const Family& family = find_family(curve.family);
    ParamSet shared = scenario.shared;
    for (const auto& [key, value] : config.params) {
        if (!shared.contains(key)) {
            std::string known;
            for (const auto& kv : scenario.shared) {
                known += (known.empty() ? "" : ", ") + kv.first;
            }
            throw ConfigError("unknown parameter '" + key + "' for " + scenario.id + " (known: " + known + ")");
        }
        shared[key] = value;
    }
    ParamSet overrides;
    for (const auto& [key, value] : shared) {
        if (family.defaults.contains(key)) {
            overrides[key] = value;
        }
    }
    for (const auto& [key, value] : curve.params) {
        overrides[key] = value;
    }
    return resolve_params(family, overrides);
}

CsvDocument run_figure(const Scenario& scenario, const RunConfig& config)
{
    const Numerics num = numerics_of(config);
    std::vector<ParamSet> params;
    std::vector<std::string> labels;
    for (const auto& c : scenario.curves) {
        params.push_back(curve_params(scenario, c, config));
        labels.push_back(c.label);
    }

    CsvDocument doc;
    doc.metadata = {{"tool", kToolVersion},
                    {"scenario", scenario.id},
                    {"title", scenario.title},
                    {"grid", std::to_string(config.grid)},
                    {"cutoff", std::to_string(config.cutoff)}};
    ParamSet shared = scenario.shared;
    for (const auto& [key, value] : config.params) {
        shared[key] = value;
    }
    add_param_metadata(doc, "param.", shared);
    for (std::size_t i = 0; i < scenario.curves.size(); ++i) {
        doc.metadata.emplace_back("curve." + std::to_string(i + 1),
                                  labels[i] + " | " + scenario.curves[i].family + " | " + describe(params[i]));
    }
    for (const auto& note : scenario.notes) {
        doc.metadata.emplace_back("default note", note);
    }

    const auto n_curves = scenario.curves.size();
    if (scenario.kind == ScenarioKind::Distribution) {
        const auto dists = parallel_map<PhaseDistribution>(n_curves, [&](std::size_t i) {
            return find_family(scenario.curves[i].family).distribution(params[i], num);
        });
        doc.table = distribution_table(scenario.axis, labels, dists, num.grid);
        return doc;
    }

    if (config.sweep_points < 1) {
        throw ConfigError("sweep.points must be positive");
    }
    const std::vector<double> axis = linspace(config.sweep_from, config.sweep_to, config.sweep_points);
    doc.metadata.emplace_back("axis", scenario.axis + " from " + format_real(config.sweep_from) + " to " +
                                          format_real(config.sweep_to) + " in " +
                                          std::to_string(config.sweep_points) + " points");
    std::vector<std::vector<double>> columns(n_curves);
    for (std::size_t i = 0; i < n_curves; ++i) {
        const Family& family = find_family(scenario.curves[i].family);
        ParamSet base = params[i];
        if (!base.contains(scenario.axis)) {
            throw ConfigError("axis '" + scenario.axis + "' is not a parameter of " + family.name);
        }
        if (scenario.kind == ScenarioKind::Population) {
            if (!family.population) {
                throw ConfigError("family " + family.name + " has no population observable");
            }
            columns[i] = parallel_map<double>(axis.size(), [&](std::size_t k) {
                ParamSet p = base;
                p[scenario.axis] = axis[k];
                return family.population(p);
            });
        } else {
            const DispersionCurve curve = dispersion_sweep(scenario.axis, axis, [&](double v) {
                ParamSet p = base;
                p[scenario.axis] = v;
                return family.distribution(p, num);
            });
            for (const auto& pt : curve.points) {
                columns[i].push_back(pt.D);
            }
        }
    }
    doc.table = axis_table(scenario.axis, axis, labels, columns);
    return doc;
}

CsvDocument run_sweep(const RunConfig& config)
{
    if (config.family.empty()) {
        throw ConfigError("sweep needs a family");
    }
    const Family& family = find_family(config.family);
    const ParamSet base = resolve_params(family, config.params);
    if (!base.contains(config.sweep_param)) {
        throw ConfigError("sweep.param '" + config.sweep_param + "' is not a parameter of " + family.name);
    }
    if (config.sweep_points < 1) {
        throw ConfigError("sweep.points must be positive");
    }
    const Numerics num = numerics_of(config);
    const std::vector<double> axis = linspace(config.sweep_from, config.sweep_to, config.sweep_points);

    CsvDocument doc;
    doc.metadata = {{"tool", kToolVersion},
                    {"scenario", "sweep"},
                    {"title", config.quantity + " of " + family.name + " vs " + config.sweep_param},
                    {"family", family.name},
                    {"quantity", config.quantity},
                    {"grid", std::to_string(config.grid)},
                    {"cutoff", std::to_string(config.cutoff)}};
    add_param_metadata(doc, "param.", base);
    doc.metadata.emplace_back("axis", config.sweep_param + " from " + format_real(config.sweep_from) + " to " +
                                          format_real(config.sweep_to) + " in " +
                                          std::to_string(config.sweep_points) + " points");

    auto at = [&](double v) {
        ParamSet p = base;
        p[config.sweep_param] = v;
        return family.distribution(p, num);
    };
    if (config.quantity == "dispersion") {
        const DispersionCurve curve = dispersion_sweep(config.sweep_param, axis, at);
        std::vector<double> d;
        for (const auto& pt : curve.points) {
            d.push_back(pt.D);
        }
        doc.table = axis_table(config.sweep_param, axis, {"D"}, {d});
        return doc;
    }
    const auto dists = parallel_map<PhaseDistribution>(axis.size(), [&](std::size_t k) { return at(axis[k]); });
    std::vector<std::string> labels;
    for (double v : axis) {
        labels.push_back(config.sweep_param + "=" + format_real(v));
    }
    doc.table = distribution_table("phi", labels, dists, num.grid);
    return doc;
}

} // namespace phasediff
