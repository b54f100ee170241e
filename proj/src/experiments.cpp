// Copyright 2026 The xsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "xsim/errors.hpp"
#include "xsim/rng.hpp"

namespace xsim {

namespace {

using std::numbers::pi;

constexpr std::string_view kCommonKeys[] = {"shots", "seed", "exact", "noise"};
constexpr std::string_view kTetraKeys[] = {"theta", "phi", "resolution"};
constexpr std::string_view kTimeKeys[] = {"lambda", "gamma", "J", "kappa", "Jz", "t_min", "t_max", "t_points"};
constexpr std::string_view kFieldKeys[] = {"B", "b"};
constexpr std::string_view kFidelityKeys[] = {"protocols", "layout"};
constexpr std::string_view kXprepKeys[] = {"target"};

bool is_field(ExperimentKind k) { return k == ExperimentKind::FieldConc || k == ExperimentKind::FieldFidelity; }

bool is_fidelity(ExperimentKind k) {
    return k == ExperimentKind::HeisenbergFidelity || k == ExperimentKind::FieldFidelity;
}

std::vector<std::string_view> allowed_params(ExperimentKind k) {
    std::vector<std::string_view> keys(std::begin(kCommonKeys), std::end(kCommonKeys));
    auto add = [&keys](const auto &more) { keys.insert(keys.end(), std::begin(more), std::end(more)); };
    if (k == ExperimentKind::TetraSweep) {
        add(kTetraKeys);
    } else if (k == ExperimentKind::XprepSingle) {
        add(kXprepKeys);
    } else {
        add(kTimeKeys);
        if (is_field(k)) {
            add(kFieldKeys);
        }
        if (is_fidelity(k)) {
            add(kFidelityKeys);
        }
    }
    return keys;
}

double get_number(const Json &j, const char *key) {
    if (!j.at(key).is_number()) {
        throw ConfigError(std::string("params.") + key + " must be a number");
    }
    const double v = j.at(key).get<double>();
    if (!std::isfinite(v)) {
        throw ConfigError(std::string("params.") + key + " must be finite");
    }
    return v;
}

std::uint64_t get_unsigned(const Json &j, const char *key) {
    const Json &v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw ConfigError(std::string("params.") + key + " must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

Protocol parse_protocol(const Json &j) {
    if (j.is_string()) {
        for (Protocol p : {Protocol::Full, Protocol::Partial5, Protocol::Partial3}) {
            if (j.get<std::string>() == protocol_name(p)) {
                return p;
            }
        }
    }
    throw ConfigError("unknown protocol " + j.dump());
}

std::string fidelity_column(Protocol p) {
    switch (p) {
    case Protocol::Full:
        return "F_f";
    case Protocol::Partial5:
        return "F_p5";
    case Protocol::Partial3:
        return "F_p3";
    }
    return "";
}

double max_rate(const ExperimentConfig &cfg) {
    const HeisenbergParams h = cfg.heisenberg();
    return std::max({std::abs(h.J()), std::abs(h.j_kappa()), h.xi(), h.eta()});
}

TomographyOptions tomography_options(const ExperimentConfig &cfg, std::uint64_t seed,
                                     std::vector<Protocol> protocols) {
    TomographyOptions opts;
    opts.shots = cfg.effective_shots();
    opts.seed = seed;
    opts.p_readout = cfg.noise.p_readout;
    opts.protocols = std::move(protocols);
    return opts;
}

Json shots_json(const ExperimentConfig &cfg) {
    return cfg.exact ? Json("exact") : Json(cfg.shots);
}

/// Target XState, its real spectral form and the phases stripped on the way.
struct XprepPlan {
    DensityMatrix target = DensityMatrix::maximally_mixed(4);
    XSpectral spectral;
    PhaseRecord phases;
    Circuit circuit{4};
};

XprepPlan plan_xprep(const ExperimentConfig &cfg) {
    XprepPlan plan;
    if (cfg.target_state) {
        validate(*cfg.target_state);
        plan.target = to_density(*cfg.target_state);
        const StrippedState stripped = strip_phases(plan.target);
        plan.phases = stripped.phases;
        try {
            plan.spectral = to_spectral(stripped.state);
        } catch (const InfeasibleError &e) {
            throw InfeasibleError("target " + to_json(*cfg.target_state).dump() +
                                  " has no feasible spectral form: " + e.what());
        }
    } else {
        plan.spectral = *cfg.target_spectral;
        plan.target = to_density(from_spectral(plan.spectral));
    }
    plan.circuit = build_xstate_circuit(plan.spectral.p, plan.spectral.theta, plan.spectral.phi);
    if (plan.phases.alpha != 0.0) {
        plan.circuit.append(Gate::rz(2, -plan.phases.alpha));
    }
    if (plan.phases.beta != 0.0) {
        plan.circuit.append(Gate::rz(3, -plan.phases.beta));
    }
    return plan;
}

Json table_json(const ExperimentConfig &cfg, const Table &table) {
    Json rows = Json::array();
    for (const auto &row : table.rows) {
        rows.push_back(Json(row));
    }
    return {{"experiment", std::string(experiment_name(cfg.experiment))},
            {"seed", cfg.seed},
            {"shots", shots_json(cfg)},
            {"fidelity_convention", kFidelityConvention},
            {"noise", to_json(cfg.noise)},
            {"config", config_to_json(cfg)},
            {"columns", table.columns},
            {"rows", rows}};
}

}  // namespace

std::string_view experiment_name(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::TetraSweep:
        return "tetra_sweep";
    case ExperimentKind::HeisenbergConc:
        return "heisenberg_conc";
    case ExperimentKind::HeisenbergFidelity:
        return "heisenberg_fidelity";
    case ExperimentKind::FieldConc:
        return "field_conc";
    case ExperimentKind::FieldFidelity:
        return "field_fidelity";
    case ExperimentKind::XprepSingle:
        return "xprep_single";
    }
    return "";
}

ExperimentKind parse_experiment(std::string_view name) {
    for (ExperimentKind k : {ExperimentKind::TetraSweep, ExperimentKind::HeisenbergConc,
                             ExperimentKind::HeisenbergFidelity, ExperimentKind::FieldConc,
                             ExperimentKind::FieldFidelity, ExperimentKind::XprepSingle}) {
        if (name == experiment_name(k)) {
            return k;
        }
    }
    throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

ExperimentConfig default_config(ExperimentKind kind) {
    ExperimentConfig cfg;
    cfg.experiment = kind;
    switch (kind) {
    case ExperimentKind::TetraSweep:
        cfg.theta = pi / 6;
        cfg.phi = pi / 6;
        break;
    case ExperimentKind::HeisenbergConc:
    case ExperimentKind::HeisenbergFidelity:
        cfg.gamma = 2 * std::acos(std::sqrt(7.0 / 8.0));
        cfg.kappa = 0.75;
        cfg.protocols = {Protocol::Full, Protocol::Partial5, Protocol::Partial3};
        break;
    case ExperimentKind::FieldConc:
    case ExperimentKind::FieldFidelity:
        cfg.gamma = 2 * std::acos(std::sqrt(3.0 / 4.0));
        cfg.kappa = 0.95;
        cfg.B = 1.0;
        cfg.b = 0.5;
        // PARTIAL3 assumes real coherences, which a field breaks.
        cfg.protocols = {Protocol::Full, Protocol::Partial5};
        break;
    case ExperimentKind::XprepSingle:
        cfg.format = OutputFormat::Json;
        cfg.protocols = {Protocol::Full, Protocol::Partial5, Protocol::Partial3};
        break;
    }
    return cfg;
}

ExperimentConfig parse_config(const Json &j) {
    reject_unknown_keys(j, {"experiment", "params", "output"}, "config");
    if (!j.contains("experiment") || !j.at("experiment").is_string()) {
        throw ConfigError("config needs an 'experiment' name");
    }
    ExperimentConfig cfg = default_config(parse_experiment(j.at("experiment").get<std::string>()));

    const Json params = j.value("params", Json::object());
    if (!params.is_object()) {
        throw ConfigError("params must be a JSON object");
    }
    const auto allowed = allowed_params(cfg.experiment);
    for (const auto &[key, value] : params.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError("unknown key '" + key + "' in params of " + std::string(experiment_name(cfg.experiment)));
        }
    }

    auto num = [&params](const char *key, double &dst) {
        if (params.contains(key)) {
            dst = get_number(params, key);
        }
    };
    num("lambda", cfg.lambda);
    num("gamma", cfg.gamma);
    num("J", cfg.J);
    num("kappa", cfg.kappa);
    num("Jz", cfg.Jz);
    num("B", cfg.B);
    num("b", cfg.b);
    num("theta", cfg.theta);
    num("phi", cfg.phi);
    num("t_min", cfg.t_min);
    if (params.contains("t_max")) {
        cfg.t_max = get_number(params, "t_max");
    }
    if (params.contains("resolution")) {
        cfg.resolution = static_cast<int>(std::min<std::uint64_t>(get_unsigned(params, "resolution"), 1u << 20));
    }
    if (params.contains("t_points")) {
        cfg.t_points = static_cast<int>(std::min<std::uint64_t>(get_unsigned(params, "t_points"), 1u << 20));
    }
    if (params.contains("shots")) {
        cfg.shots = get_unsigned(params, "shots");
    }
    if (params.contains("seed")) {
        cfg.seed = get_unsigned(params, "seed");
    }
    if (params.contains("exact")) {
        if (!params.at("exact").is_boolean()) {
            throw ConfigError("params.exact must be a boolean");
        }
        cfg.exact = params.at("exact").get<bool>();
    }
    if (params.contains("noise")) {
        const Json &n = params.at("noise");
        if (n.is_string() && n.get<std::string>() == "none") {
            cfg.noise = NoiseModel::none();
        } else {
            cfg.noise = noise_from_json(n);
        }
    }
    if (params.contains("protocols")) {
        const Json &ps = params.at("protocols");
        if (!ps.is_array() || ps.empty()) {
            throw ConfigError("params.protocols must be a non-empty array");
        }
        cfg.protocols.clear();
        for (const auto &p : ps) {
            cfg.protocols.push_back(parse_protocol(p));
        }
    }
    if (params.contains("layout")) {
        const Json &l = params.at("layout");
        if (l == "wide") {
            cfg.layout = Layout::Wide;
        } else if (l == "long") {
            cfg.layout = Layout::Long;
        } else {
            throw ConfigError("params.layout must be 'wide' or 'long'");
        }
    }
    if (params.contains("target")) {
        const Json &t = params.at("target");
        reject_unknown_keys(t, {"xstate", "spectral"}, "params.target");
        if (t.contains("xstate") == t.contains("spectral")) {
            throw ConfigError("params.target needs exactly one of 'xstate' or 'spectral'");
        }
        if (t.contains("xstate")) {
            cfg.target_state = xstate_from_json(t.at("xstate"));
        } else {
            cfg.target_spectral = xspectral_from_json(t.at("spectral"));
        }
    }

    if (j.contains("output")) {
        const Json &out = j.at("output");
        reject_unknown_keys(out, {"path", "format"}, "output");
        if (out.contains("path")) {
            if (!out.at("path").is_string()) {
                throw ConfigError("output.path must be a string");
            }
            cfg.output_path = out.at("path").get<std::string>();
        }
        if (out.contains("format")) {
            const Json &f = out.at("format");
            if (f == "csv") {
                cfg.format = OutputFormat::Csv;
            } else if (f == "json") {
                cfg.format = OutputFormat::Json;
            } else {
                throw ConfigError("output.format must be 'csv' or 'json'");
            }
        }
    }

    validate_config(cfg);
    return cfg;
}

void validate_config(const ExperimentConfig &cfg) {
    if (!cfg.exact && cfg.shots == 0) {
        throw ConfigError("shots must be positive unless exact is set");
    }
    try {
        validate(cfg.noise);
    } catch (const ContractViolation &e) {
        throw ConfigError(std::string("noise: ") + e.what());
    }
    switch (cfg.experiment) {
    case ExperimentKind::TetraSweep:
        if (cfg.resolution < 1) {
            throw ConfigError("resolution must be at least 1");
        }
        if (!(cfg.theta >= 0.0 && cfg.theta <= pi / 2) || !(cfg.phi >= 0.0 && cfg.phi <= pi / 2)) {
            throw ConfigError("theta and phi must lie in [0, pi/2]");
        }
        break;
    case ExperimentKind::XprepSingle:
        if (!cfg.target_state && !cfg.target_spectral) {
            throw ConfigError("xprep_single needs params.target");
        }
        if (cfg.format != OutputFormat::Json) {
            throw ConfigError("xprep_single writes JSON only");
        }
        break;
    default:
        if (!(cfg.lambda >= -1.0 && cfg.lambda <= 1.0)) {
            throw ConfigError("lambda must lie in [-1, 1]");
        }
        if (!is_field(cfg.experiment) && (cfg.B != 0.0 || cfg.b != 0.0)) {
            throw ConfigError("zero-field experiments take no field");
        }
        if (cfg.t_points < 1) {
            throw ConfigError("t_points must be at least 1");
        }
        if (!cfg.t_max && !(max_rate(cfg) > 0.0)) {
            throw ConfigError("t_max is required when every coupling and field vanishes");
        }
        if (cfg.t_max && !std::isfinite(*cfg.t_max)) {
            throw ConfigError("t_max must be finite");
        }
        if (is_fidelity(cfg.experiment)) {
            if (cfg.protocols.empty()) {
                throw ConfigError("protocols must not be empty");
            }
            for (std::size_t k = 0; k < cfg.protocols.size(); ++k) {
                if (std::find(cfg.protocols.begin(), cfg.protocols.begin() + k, cfg.protocols[k]) !=
                    cfg.protocols.begin() + k) {
                    throw ConfigError("protocols must not repeat");
                }
            }
            if (is_field(cfg.experiment) &&
                std::find(cfg.protocols.begin(), cfg.protocols.end(), Protocol::Partial3) != cfg.protocols.end()) {
                throw ConfigError("PARTIAL3 assumes real coherences; field experiments reject it");
            }
        }
        break;
    }
}

Json config_to_json(const ExperimentConfig &cfg) {
    Json params = {{"shots", cfg.shots}, {"seed", cfg.seed}, {"exact", cfg.exact}, {"noise", to_json(cfg.noise)}};
    switch (cfg.experiment) {
    case ExperimentKind::TetraSweep:
        params["theta"] = cfg.theta;
        params["phi"] = cfg.phi;
        params["resolution"] = cfg.resolution;
        break;
    case ExperimentKind::XprepSingle:
        if (cfg.target_state) {
            params["target"] = {{"xstate", to_json(*cfg.target_state)}};
        } else if (cfg.target_spectral) {
            params["target"] = {{"spectral", to_json(*cfg.target_spectral)}};
        }
        break;
    default: {
        params["lambda"] = cfg.lambda;
        params["gamma"] = cfg.gamma;
        params["J"] = cfg.J;
        params["kappa"] = cfg.kappa;
        params["Jz"] = cfg.Jz;
        params["t_min"] = cfg.t_min;
        const std::vector<double> grid = time_grid(cfg);
        params["t_max"] = cfg.t_max ? *cfg.t_max : grid.back();
        params["t_points"] = cfg.t_points;
        if (is_field(cfg.experiment)) {
            params["B"] = cfg.B;
            params["b"] = cfg.b;
        }
        if (is_fidelity(cfg.experiment)) {
            Json ps = Json::array();
            for (Protocol p : cfg.protocols) {
                ps.push_back(std::string(protocol_name(p)));
            }
            params["protocols"] = ps;
            params["layout"] = cfg.layout == Layout::Wide ? "wide" : "long";
        }
        break;
    }
    }
    const Json output = {{"format", cfg.format == OutputFormat::Csv ? "csv" : "json"}};
    return {{"experiment", std::string(experiment_name(cfg.experiment))}, {"params", params}, {"output", output}};
}

std::vector<Probabilities4> simplex_grid(int resolution) {
    if (resolution < 1) {
        throw ConfigError("resolution must be at least 1");
    }
    const double n = resolution;
    std::vector<Probabilities4> grid;
    for (int i = 0; i <= resolution; ++i) {
        for (int j = 0; i + j <= resolution; ++j) {
            for (int k = 0; i + j + k <= resolution; ++k) {
                const int l = resolution - i - j - k;
                grid.push_back({i / n, j / n, k / n, l / n});
            }
        }
    }
    return grid;
}

std::vector<double> time_grid(const ExperimentConfig &cfg) {
    const double t_max = cfg.t_max ? *cfg.t_max : 2 * pi / max_rate(cfg);
    std::vector<double> grid(static_cast<std::size_t>(cfg.t_points));
    for (int k = 0; k < cfg.t_points; ++k) {
        grid[k] = cfg.t_points == 1 ? cfg.t_min : cfg.t_min + (t_max - cfg.t_min) * k / (cfg.t_points - 1);
    }
    return grid;
}

Probabilities4 sector_weights(double lambda, double gamma) {
    const double plus = (1 + lambda) / 2, minus = (1 - lambda) / 2;
    const double c2 = std::cos(gamma / 2) * std::cos(gamma / 2), s2 = std::sin(gamma / 2) * std::sin(gamma / 2);
    return {plus * c2, plus * s2, minus * c2, minus * s2};
}

XState zero_field_target(const ExperimentConfig &cfg, double t) {
    const HeisenbergParams h = cfg.heisenberg();
    return x_state_from_angles(sector_weights(cfg.lambda, cfg.gamma), h.j_kappa() * t, h.J() * t);
}

DensityMatrix field_target(const ExperimentConfig &cfg, double t) {
    const Probabilities4 w = sector_weights(cfg.lambda, cfg.gamma);
    const ComplexMatrix rho0 = ComplexMatrix::diagonal({w[0], w[3], w[1], w[2]});
    return DensityMatrix::from_matrix(conjugate(rho0, propagator(cfg.heisenberg(), t).matrix()));
}

Circuit time_point_circuit(const ExperimentConfig &cfg, double t) {
    if (!is_field(cfg.experiment)) {
        const HeisenbergParams h = cfg.heisenberg();
        return build_sector_mixture_circuit(cfg.lambda, cfg.gamma, h.j_kappa() * t, h.J() * t);
    }
    const Probabilities4 w = sector_weights(cfg.lambda, cfg.gamma);
    Circuit c = build_classical_block({w[0], w[3], w[1], w[2]});
    append_x_unitary(c, heisenberg_x_params(cfg.heisenberg(), t), 2, 3);
    return c;
}

DensityMatrix time_point_target(const ExperimentConfig &cfg, double t) {
    return is_field(cfg.experiment) ? field_target(cfg, t) : to_density(zero_field_target(cfg, t));
}

DensityMatrix prepared_pair(const Circuit &c, const NoiseModel &nm) {
    static constexpr int kPair[] = {2, 3};
    return partial_trace(run_noisy(c, DensityMatrix::basis_state(16, 0), nm), kPair);
}

TetraPoint tetra_point(const ExperimentConfig &cfg, const Probabilities4 &p, std::uint64_t seed) {
    TetraPoint out;
    out.p = p;
    const XSpectral spectral{p, cfg.theta, cfg.phi};
    const XState target = from_spectral(spectral);
    out.c_analytic = concurrence_x(target);
    const DensityMatrix noisy = prepared_pair(build_xstate_circuit(p, cfg.theta, cfg.phi), cfg.noise);
    out.c_noisy = concurrence_wootters_oracle(noisy);
    out.leakage = leakage(noisy);
    const TomographyOptions opts = tomography_options(cfg, seed, {Protocol::Partial3});
    out.c_shot = tomography(to_density(target), noisy, Protocol::Partial3, opts).concurrence;
    return out;
}

ConcurrencePoint concurrence_point(const ExperimentConfig &cfg, double t, std::uint64_t seed) {
    const Protocol protocol = is_field(cfg.experiment) ? Protocol::Partial5 : Protocol::Partial3;
    const DensityMatrix target = time_point_target(cfg, t);
    const DensityMatrix noisy = prepared_pair(time_point_circuit(cfg, t), cfg.noise);
    const TomographyOptions opts = tomography_options(cfg, seed, {protocol});
    return {t, concurrence_wootters_oracle(target), tomography(target, noisy, protocol, opts).concurrence};
}

FidelityPoint fidelity_point(const ExperimentConfig &cfg, double t, std::uint64_t seed) {
    const DensityMatrix target = time_point_target(cfg, t);
    const DensityMatrix noisy = prepared_pair(time_point_circuit(cfg, t), cfg.noise);
    return {t, robustness_report(target, noisy, tomography_options(cfg, seed, cfg.protocols))};
}

Table run_tetra_sweep(const ExperimentConfig &cfg) {
    Table table{{"p00", "p01", "p10", "p11", "C_analytic", "C_noisy_sim", "C_shot_tomo"}, {}};
    const std::vector<Probabilities4> grid = simplex_grid(cfg.resolution);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const TetraPoint pt = tetra_point(cfg, grid[k], derive_seed(cfg.seed, k));
        table.rows.push_back({pt.p[0], pt.p[1], pt.p[2], pt.p[3], pt.c_analytic, pt.c_noisy, pt.c_shot});
    }
    return table;
}

Table run_concurrence_experiment(const ExperimentConfig &cfg) {
    Table table{{"t", "C_analytic", "C_reconstructed"}, {}};
    const std::vector<double> grid = time_grid(cfg);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const ConcurrencePoint pt = concurrence_point(cfg, grid[k], derive_seed(cfg.seed, k));
        table.rows.push_back({pt.t, pt.c_analytic, pt.c_reconstructed});
    }
    return table;
}

Table run_fidelity_experiment(const ExperimentConfig &cfg) {
    Table table;
    if (cfg.layout == Layout::Wide) {
        table.columns.push_back("t");
        for (Protocol p : cfg.protocols) {
            table.columns.push_back(fidelity_column(p));
        }
        table.columns.push_back("leakage");
    } else {
        table.columns = {"experiment-id", "t", "protocol", "fidelity", "concurrence_estimate", "leakage", "shots", "seed"};
    }
    const std::string id(experiment_name(cfg.experiment));
    const std::vector<double> grid = time_grid(cfg);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const std::uint64_t seed = derive_seed(cfg.seed, k);
        const FidelityPoint pt = fidelity_point(cfg, grid[k], seed);
        if (cfg.layout == Layout::Wide) {
            std::vector<Json> row{pt.t};
            for (const auto &r : pt.report.reports) {
                row.push_back(r.fidelity);
            }
            row.push_back(pt.report.input_leakage);
            table.rows.push_back(std::move(row));
        } else {
            for (const auto &r : pt.report.reports) {
                table.rows.push_back({id, pt.t, std::string(protocol_name(r.protocol)), r.fidelity, r.concurrence,
                                      r.leakage, r.shots, r.seed});
            }
        }
    }
    return table;
}

Json run_xprep_single(const ExperimentConfig &cfg) {
    const XprepPlan plan = plan_xprep(cfg);
    const DensityMatrix ideal = prepared_pair(plan.circuit, NoiseModel::none());
    const DensityMatrix noisy = prepared_pair(plan.circuit, cfg.noise);
    const RobustnessReport report =
        robustness_report(plan.target, noisy, tomography_options(cfg, cfg.seed, cfg.protocols));

    Json reconstructions = Json::array();
    Json reconstructed_c = Json::object();
    for (const auto &r : report.reports) {
        reconstructions.push_back(to_json(r));
        reconstructed_c[std::string(protocol_name(r.protocol))] = r.concurrence;
    }
    auto output = [&plan](const DensityMatrix &rho) {
        return Json{{"state", to_json(rho.matrix())}, {"fidelity", fidelity(plan.target, rho)}, {"leakage", leakage(rho)}};
    };
    return {{"experiment", std::string(experiment_name(cfg.experiment))},
            {"seed", cfg.seed},
            {"shots", shots_json(cfg)},
            {"fidelity_convention", kFidelityConvention},
            {"noise", to_json(cfg.noise)},
            {"config", config_to_json(cfg)},
            {"target", to_json(from_density(plan.target))},
            {"spectral", to_json(plan.spectral)},
            {"phases", {{"alpha", plan.phases.alpha}, {"beta", plan.phases.beta}}},
            {"circuit", to_json(plan.circuit)},
            {"ideal_output", output(ideal)},
            {"noisy_output", output(noisy)},
            {"reconstructions", reconstructions},
            {"concurrence",
             {{"analytic", concurrence_x(from_density(plan.target))},
              {"ideal", concurrence_wootters_oracle(ideal)},
              {"noisy", concurrence_wootters_oracle(noisy)},
              {"reconstructed", reconstructed_c}}}};
}

std::string render_csv(const ExperimentConfig &cfg, const Table &table) {
    std::ostringstream out;
    out << "# xsim experiment=" << experiment_name(cfg.experiment) << " seed=" << cfg.seed
        << " shots=" << (cfg.exact ? std::string("exact") : std::to_string(cfg.shots))
        << " fidelity_convention=" << kFidelityConvention << " noise=" << to_json(cfg.noise).dump() << '\n';
    for (std::size_t k = 0; k < table.columns.size(); ++k) {
        out << (k ? "," : "") << table.columns[k];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            out << (k ? "," : "");
            if (row[k].is_string()) {
                out << row[k].get<std::string>();
            } else if (row[k].is_number_integer()) {
                out << row[k].dump();
            } else {
                out << format_double(row[k].get<double>());
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string run_experiment(const ExperimentConfig &cfg) {
    validate_config(cfg);
    if (cfg.experiment == ExperimentKind::XprepSingle) {
        return run_xprep_single(cfg).dump(2) + "\n";
    }
    Table table;
    switch (cfg.experiment) {
    case ExperimentKind::TetraSweep:
        table = run_tetra_sweep(cfg);
        break;
    case ExperimentKind::HeisenbergConc:
    case ExperimentKind::FieldConc:
        table = run_concurrence_experiment(cfg);
        break;
    default:
        table = run_fidelity_experiment(cfg);
        break;
    }
    return cfg.format == OutputFormat::Csv ? render_csv(cfg, table) : table_json(cfg, table).dump(2) + "\n";
}

Json dump_circuits(const ExperimentConfig &cfg) {
    validate_config(cfg);
    Json list = Json::array();
    if (cfg.experiment == ExperimentKind::TetraSweep) {
        const std::vector<Probabilities4> grid = simplex_grid(cfg.resolution);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            list.push_back({{"index", k},
                            {"point", {{"p", grid[k]}, {"theta", cfg.theta}, {"phi", cfg.phi}}},
                            {"circuit", to_json(build_xstate_circuit(grid[k], cfg.theta, cfg.phi))}});
        }
    } else if (cfg.experiment == ExperimentKind::XprepSingle) {
        const XprepPlan plan = plan_xprep(cfg);
        list.push_back({{"index", 0}, {"point", {{"spectral", to_json(plan.spectral)}}}, {"circuit", to_json(plan.circuit)}});
    } else {
        const std::vector<double> grid = time_grid(cfg);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            list.push_back({{"index", k}, {"point", {{"t", grid[k]}}}, {"circuit", to_json(time_point_circuit(cfg, grid[k]))}});
        }
    }
    return list;
}

}  // namespace xsim
