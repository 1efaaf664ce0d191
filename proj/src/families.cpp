#include "phasediff/families.hpp"

#include <cmath>
#include <numbers>

#include "phasediff/bath_kernels.hpp"
#include "phasediff/dissipative_oscillator.hpp"
#include "phasediff/dissipative_qubit.hpp"
#include "phasediff/qnd_phase.hpp"

namespace phasediff {

namespace {

constexpr double kPi = std::numbers::pi;

double get(const ParamSet& p, const std::string& key)
{
    const auto it = p.find(key);
    if (it == p.end()) {
        throw ConfigError("missing parameter '" + key + "'");
    }
    return it->second;
}

HalfInteger half_integer(const ParamSet& p, const std::string& key)
{
    const double twice = 2.0 * get(p, key);
    const double rounded = std::round(twice);
    if (std::abs(twice - rounded) > 1e-9) {
        throw ConfigError("parameter '" + key + "' must be an integer or half-integer");
    }
    return HalfInteger::from_twice(static_cast<int>(rounded));
}

int sign_of_half(const ParamSet& p, const std::string& key)
{
    const double v = get(p, key);
    if (v == 0.5) {
        return 1;
    }
    if (v == -0.5) {
        return -1;
    }
    throw ConfigError("parameter '" + key + "' must be 0.5 or -0.5");
}

QndBathSpec qnd_bath(const ParamSet& p)
{
    QndBathSpec spec;
    spec.gamma0 = get(p, "gamma0");
    spec.omega_c = get(p, "omega_c");
    spec.r = get(p, "r");
    spec.a = get(p, "a");
    spec.regime = regime_for_temperature(get(p, "T"));
    return spec;
}

double qnd_theta(const ParamSet& p)
{
    const double zeta = get(p, "zeta");
    return zeta > 0.0 ? theta_from_zeta(zeta) : get(p, "Theta");
}

QubitLindbladSpec qubit_spec(const ParamSet& p)
{
    return QubitLindbladSpec::make(get(p, "omega"), get(p, "gamma0"), get(p, "r"), get(p, "Phi"), get(p, "T"));
}

std::vector<Family> build_families()
{
    std::vector<Family> out;

    out.push_back(Family{
        "qnd_atomic_squeezed",
        "N = 2j atoms in an atomic squeezed state, QND bath (zeta > 0 overrides Theta)",
        {{"j", 5.0}, {"p", 5.0}, {"Theta", -0.01832}, {"zeta", 0.0}, {"gamma0", 0.0025}, {"omega", 1.0},
         {"omega_c", 100.0}, {"r", 0.0}, {"a", 0.0}, {"T", 0.0}, {"t", 1.0}},
        [](const ParamSet& p, const Numerics& num) {
            const QndBathSpec bath = qnd_bath(p);
            const double t = get(p, "t");
            const auto rho0 = atomic_squeezed_density({half_integer(p, "j"), half_integer(p, "p"), qnd_theta(p)});
            const auto rho = qnd_evolve(rho0, get(p, "omega"), t, eta(t, bath), gamma_qnd(t, bath));
            return phase_distribution_atomic(rho, num.grid, num.exec);
        },
        {}});

    out.push_back(Family{
        "qnd_atomic_coherent",
        "N = 2j atoms in an atomic coherent state, QND bath",
        {{"j", 0.5}, {"alpha_p", kPi / 4.0}, {"beta_p", kPi / 4.0}, {"gamma0", 0.0025}, {"omega", 1.0},
         {"omega_c", 100.0}, {"r", 0.0}, {"a", 0.0}, {"T", 0.0}, {"t", 1.0}},
        [](const ParamSet& p, const Numerics& num) {
            const QndBathSpec bath = qnd_bath(p);
            const double t = get(p, "t");
            const AtomicCoherentParams ac{get(p, "alpha_p"), get(p, "beta_p")};
            const HalfInteger j = half_integer(p, "j");
            if (j.twice == 1) {
                return phase_dist_coherent_halfspin(ac, get(p, "omega"), t, gamma_qnd(t, bath), num.grid);
            }
            const auto rho = qnd_evolve(atomic_coherent_density(ac, j), get(p, "omega"), t, eta(t, bath),
                                        gamma_qnd(t, bath));
            return phase_distribution_atomic(rho, num.grid, num.exec);
        },
        {}});

    out.push_back(Family{
        "qnd_osc_squeezed",
        "oscillator in a squeezed coherent state (alpha_sq = |alpha|^2), QND bath",
        {{"r1", 0.5}, {"psi", kPi / 4.0}, {"alpha_sq", 5.0}, {"theta0", 0.0}, {"gamma0", 0.0025}, {"omega", 1.0},
         {"omega_c", 100.0}, {"r", 0.0}, {"a", 0.0}, {"T", 0.0}, {"t", 0.1}},
        [](const ParamSet& p, const Numerics& num) {
            const QndBathSpec bath = qnd_bath(p);
            const double t = get(p, "t");
            const double alpha_sq = get(p, "alpha_sq");
            if (alpha_sq < 0.0) {
                throw ConfigError("alpha_sq must be non-negative");
            }
            FockTruncation trunc;
            trunc.cutoff = num.cutoff;
            return phase_dist_osc_squeezed(get(p, "r1"), get(p, "psi"), std::sqrt(alpha_sq), get(p, "theta0"),
                                           get(p, "omega"), t, eta(t, bath), gamma_qnd(t, bath), trunc, num.grid,
                                           num.exec);
        },
        {}});

    out.push_back(Family{
        "qubit_coherent",
        "two-level atom in an atomic coherent state, dissipative squeezed thermal bath",
        {{"alpha_p", kPi / 4.0}, {"beta_p", kPi / 4.0}, {"gamma0", 0.0025}, {"omega", 1.0}, {"r", 0.0},
         {"Phi", kPi / 8.0}, {"T", 0.0}, {"t", 1.0}},
        [](const ParamSet& p, const Numerics& num) {
            return phase_dist_qubit_coherent({get(p, "alpha_p"), get(p, "beta_p")}, qubit_spec(p), get(p, "t"),
                                             num.grid);
        },
        [](const ParamSet& p) {
            return excited_population({get(p, "alpha_p"), get(p, "beta_p")}, qubit_spec(p), get(p, "t"));
        }});

    out.push_back(Family{
        "qubit_squeezed",
        "two-level atom in an atomic squeezed state |1/2, p>, dissipative squeezed thermal bath",
        {{"Theta", -0.01832}, {"p", 0.5}, {"gamma0", 0.025}, {"omega", 1.0}, {"r", 0.0}, {"Phi", kPi / 8.0},
         {"T", 0.0}, {"t", 0.1}},
        [](const ParamSet& p, const Numerics& num) {
            return phase_dist_qubit_squeezed(get(p, "Theta"), sign_of_half(p, "p"), qubit_spec(p), get(p, "t"),
                                             num.grid);
        },
        {}});

    out.push_back(Family{
        "osc_dissipative",
        "oscillator from S(zeta) D(eta0)|0>, zeta = r e^{i Phi}, dissipative squeezed thermal bath",
        {{"eta0_sq", 1.0}, {"eta0_phase", 0.0}, {"gamma0", 0.025}, {"omega", 1.0}, {"r", 1.0}, {"Phi", 0.0},
         {"T", 0.0}, {"t", 0.1}},
        [](const ParamSet& p, const Numerics& num) {
            const double eta_sq = get(p, "eta0_sq");
            if (eta_sq < 0.0) {
                throw ConfigError("eta0_sq must be non-negative");
            }
            const auto spec = OscillatorLindbladSpec::make(get(p, "omega"), get(p, "gamma0"), get(p, "r"),
                                                           get(p, "Phi"), get(p, "T"));
            OscillatorCutoffs cut;
            cut.fock = num.cutoff;
            return phase_dist_osc_dissipative(spec, std::polar(std::sqrt(eta_sq), get(p, "eta0_phase")), get(p, "t"),
                                              cut, num.grid, num.exec);
        },
        {}});

    return out;
}

} // namespace

const std::vector<Family>& families()
{
    static const std::vector<Family> all = build_families();
    return all;
}

const Family& find_family(const std::string& name)
{
    for (const auto& f : families()) {
        if (f.name == name) {
            return f;
        }
    }
    std::string known;
    for (const auto& f : families()) {
        known += (known.empty() ? "" : ", ") + f.name;
    }
    throw ConfigError("unknown family '" + name + "' (known: " + known + ")");
}

ParamSet resolve_params(const Family& family, const ParamSet& overrides)
{
    ParamSet out = family.defaults;
    for (const auto& [key, value] : overrides) {
        const auto it = out.find(key);
        if (it == out.end()) {
            std::string known;
            for (const auto& kv : family.defaults) {
                known += (known.empty() ? "" : ", ") + kv.first;
            }
            throw ConfigError("unknown parameter '" + key + "' for family " + family.name + " (known: " + known + ")");
        }
        it->second = value;
    }
    return out;
}

} // namespace phasediff
