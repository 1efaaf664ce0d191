#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <doctest.h>

#include "phasediff/csv.hpp"
#include "phasediff/families.hpp"
#include "phasediff/run_config.hpp"
#include "phasediff/scenarios.hpp"

using namespace phasediff;

namespace {
std::size_t column(const Table& t, const std::string& name)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (t.columns[i] == name) {
            return i;
        }
    }
    FAIL("missing column " << name);
    return 0;
}
}

TEST_CASE("assignments")
{
    RunConfig c;
    apply_assignment(c, "grid", "360");
    apply_assignment(c, std::string_view("  gamma0 =  0.5 "));
    apply_assignment(c, "sweep.param", "t");
    apply_assignment(c, "sweep.points", "11");
    CHECK(c.grid == 360);
    CHECK(c.params.at("gamma0") == 0.5);
    CHECK(c.sweep_param == "t");
    CHECK(c.sweep_points == 11);
    CHECK_THROWS_AS(apply_assignment(c, "grid", "12x"), ConfigError);
    CHECK_THROWS_AS(apply_assignment(c, "gamma0", "fast"), ConfigError);
    CHECK_THROWS_AS(apply_assignment(c, std::string_view("novalue")), ConfigError);
    CHECK_THROWS_AS(apply_assignment(c, "quantity", "variance"), ConfigError);
}

TEST_CASE("config text parsing")
{
    const RunConfig c = parse_config("# comment\n\nscenario = fig2\ngrid = 90\nr = -1.5\n");
    CHECK(c.scenario == "fig2");
    CHECK(c.grid == 90);
    CHECK(c.params.at("r") == -1.5);
    CHECK_THROWS_AS(parse_config("grid 90\n"), ConfigError);
    CHECK_THROWS_AS(load_config_file("/nonexistent/phasediff.cfg"), ConfigError);
}

TEST_CASE("every scenario's configuration round-trips through text")
{
    for (const auto& s : scenarios()) {
        RunConfig c = default_config(s);
        c.params["t"] = 0.1 + 1.0 / 3.0;
        const RunConfig back = parse_config(serialize(c));
        CHECK_MESSAGE(back == c, s.id);
    }
    RunConfig sweep;
    sweep.family = "qubit_coherent";
    sweep.sweep_param = "t";
    sweep.sweep_from = 0.1;
    sweep.sweep_to = 250.0;
    sweep.sweep_points = 7;
    sweep.quantity = "distribution";
    CHECK(parse_config(serialize(sweep)) == sweep);
}

TEST_CASE("config files")
{
    const auto path = std::filesystem::temp_directory_path() / "phasediff_test_config.cfg";
    std::ofstream(path) << "grid = 180\nT = 300\n";
    const RunConfig c = load_config_file(path.string(), default_config(find_scenario("fig4a")));
    CHECK(c.grid == 180);
    CHECK(c.params.at("T") == 300.0);
    std::filesystem::remove(path);
}

TEST_CASE("figure ids")
{
    CHECK(expand_figure_id("fig4") == std::vector<std::string>{"fig4a", "fig4b"});
    CHECK(expand_figure_id("fig7") == std::vector<std::string>{"fig7"});
    CHECK_THROWS_AS(find_scenario("fig11"), ConfigError);
    CHECK_THROWS_AS(find_family("nope"), ConfigError);
    for (const auto& s : scenarios()) {
        CHECK_FALSE(s.curves.empty());
        for (const auto& curve : s.curves) {
            CHECK_NOTHROW(find_family(curve.family));
        }
    }
}

TEST_CASE("unknown parameters are rejected")
{
    const Scenario& s = find_scenario("fig1");
    RunConfig c = default_config(s);
    c.params["bogus"] = 1.0;
    CHECK_THROWS_AS(run_figure(s, c), ConfigError);
    CHECK_THROWS_AS(resolve_params(find_family("qubit_coherent"), {{"omega_c", 1.0}}), ConfigError);
}

TEST_CASE("fig1 table shape and normalization")
{
    const Scenario& s = find_scenario("fig1");
    const CsvDocument doc = run_figure(s, default_config(s));
    REQUIRE(doc.table.rows.size() == 721);
    CHECK(doc.table.columns.size() == 6);
    CHECK(doc.table.columns.front() == "phi");
    CHECK(doc.table.rows.back()[0] == doctest::Approx(2.0 * std::numbers::pi));
    for (std::size_t col = 1; col < doc.table.columns.size(); ++col) {
        CHECK(doc.table.rows.front()[col] == doc.table.rows.back()[col]);
        double sum = 0.0;
        for (std::size_t k = 0; k + 1 < doc.table.rows.size(); ++k) {
            sum += doc.table.rows[k][col];
        }
        CHECK(sum * 2.0 * std::numbers::pi / 720.0 == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("figure output is deterministic")
{
    const Scenario& s = find_scenario("fig5");
    RunConfig c = default_config(s);
    c.grid = 180;
    CHECK(to_csv(run_figure(s, c)) == to_csv(run_figure(s, c)));
}

TEST_CASE("csv format")
{
    CsvDocument doc;
    doc.metadata = {{"tool", kToolVersion}};
    doc.table.columns = {"x", "y"};
    doc.table.rows = {{0.1, 1.0 / 3.0}};
    const std::string text = to_csv(doc);
    CHECK(text == "# tool: phasediff 1.0.0\nx,y\n0.10000000000000001,0.33333333333333331\n");
    CHECK(plot_script("out.csv", doc).find("out.csv") != std::string::npos);
}

TEST_CASE("a sweep without coupling has constant dispersion")
{
    RunConfig c;
    c.family = "qnd_atomic_squeezed";
    c.grid = 360;
    c.params = {{"gamma0", 0.0}, {"j", 1.0}, {"p", 1.0}};
    c.sweep_param = "t";
    c.sweep_from = 0.0;
    c.sweep_to = 20.0;
    c.sweep_points = 9;
    const CsvDocument doc = run_sweep(c);
    REQUIRE(doc.table.rows.size() == 9);
    const std::size_t d = column(doc.table, "D");
    for (const auto& row : doc.table.rows) {
        CHECK(row[d] == doctest::Approx(doc.table.rows.front()[d]).epsilon(1e-12));
    }
}

TEST_CASE("a dissipative qubit sweep loses phase information")
{
    RunConfig c;
    c.family = "qubit_coherent";
    c.params = {{"gamma0", 0.025}, {"alpha_p", std::numbers::pi / 2}};
    c.sweep_param = "t";
    c.sweep_from = 0.0;
    c.sweep_to = 250.0;
    c.sweep_points = 26;
    const CsvDocument doc = run_sweep(c);
    const std::size_t d = column(doc.table, "D");
    for (std::size_t k = 1; k < doc.table.rows.size(); ++k) {
        CHECK(doc.table.rows[k][d] > doc.table.rows[k - 1][d]);
    }
    CHECK(doc.table.rows.back()[d] > 0.99);
}

TEST_CASE("distribution sweeps and sweep errors")
{
    RunConfig c;
    c.family = "qubit_squeezed";
    c.quantity = "distribution";
    c.grid = 90;
    c.sweep_param = "t";
    c.sweep_from = 0.0;
    c.sweep_to = 1.0;
    c.sweep_points = 3;
    const CsvDocument doc = run_sweep(c);
    CHECK(doc.table.rows.size() == 91);
    CHECK(doc.table.columns.size() == 4);

    c.sweep_param = "zeta";
    CHECK_THROWS_AS(run_sweep(c), ConfigError);
    c.sweep_param = "t";
    c.sweep_points = 0;
    CHECK_THROWS_AS(run_sweep(c), ConfigError);
    c.family.clear();
    CHECK_THROWS_AS(run_sweep(c), ConfigError);
}
