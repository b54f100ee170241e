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

#ifndef XSIM_EXPERIMENTS_HPP
#define XSIM_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xsim/circuit.hpp"
#include "xsim/heisenberg.hpp"
#include "xsim/io.hpp"
#include "xsim/noise.hpp"
#include "xsim/tomography.hpp"
#include "xsim/xstate.hpp"

namespace xsim {

enum class ExperimentKind { TetraSweep, HeisenbergConc, HeisenbergFidelity, FieldConc, FieldFidelity, XprepSingle };

std::string_view experiment_name(ExperimentKind kind);
/// Throws ConfigError on an unknown name.
ExperimentKind parse_experiment(std::string_view name);

enum class OutputFormat { Csv, Json };
/// Wide: one row per time point. Long: one row per (time point, protocol).
enum class Layout { Wide, Long };

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::TetraSweep;

    // Initial sector mixture: qubit 0 in ((1+lambda)/2, (1-lambda)/2), qubit 1 in
    // (cos^2 gamma/2, sin^2 gamma/2).
    double lambda = 1.0;
    double gamma = 0.0;

    double J = 1.0;
    double kappa = 0.0;
    double Jz = 0.0;
    double B = 0.0;
    double b = 0.0;

    double theta = 0.0;
    double phi = 0.0;
    int resolution = 8;

    double t_min = 0.0;
    std::optional<double> t_max;  // default 2 pi / max(|J|, |J kappa|, xi, eta)
    int t_points = 64;

    std::uint64_t shots = 8000;
    std::uint64_t seed = 0;
    bool exact = false;
    NoiseModel noise;
    std::vector<Protocol> protocols;
    Layout layout = Layout::Wide;

    std::optional<XState> target_state;
    std::optional<XSpectral> target_spectral;

    std::string output_path;  // empty writes to stdout
    OutputFormat format = OutputFormat::Csv;

    HeisenbergParams heisenberg() const { return HeisenbergParams::from_coupling(J, kappa, Jz, B, b); }
    /// Shots handed to tomography; 0 means exact probabilities.
    std::uint64_t effective_shots() const { return exact ? 0 : shots; }
};

/// Canonical parameter bundle of each experiment, before any config keys apply.
ExperimentConfig default_config(ExperimentKind kind);

/// {experiment, params: {...}, output: {path, format}}. Keys outside the experiment's
/// parameter set are a ConfigError, as are values that break a domain invariant.
ExperimentConfig parse_config(const Json &j);
/// Re-checks every invariant parse_config enforces; for configs edited after parsing.
void validate_config(const ExperimentConfig &cfg);
/// Every effective parameter, defaults included. The output path is left out so the
/// bytes of a result never depend on where they are written.
Json config_to_json(const ExperimentConfig &cfg);

/// All 4-vectors with components in {0, 1/n, ..., 1} summing to 1, lexicographic in
/// (p00, p01, p10, p11).
std::vector<Probabilities4> simplex_grid(int resolution);

/// t_points values evenly spaced over [t_min, t_max], both ends included.
std::vector<double> time_grid(const ExperimentConfig &cfg);

/// Weights of the four copied basis states |q0 q1> = |00>, |01>, |10>, |11>.
Probabilities4 sector_weights(double lambda, double gamma);

/// Real X-state prepared by the zero-field sector circuit at time t: spectral weights
/// sector_weights(lambda, gamma) with theta = J kappa t, phi = J t.
XState zero_field_target(const ExperimentConfig &cfg, double t);
/// U(t) rho0 U(t)^dagger with rho0 = diag(w00, w11, w01, w10) of sector_weights, the
/// state the zero-field circuit starts from at t = 0. Both sectors hold
/// diag((1+lambda)/2, (1-lambda)/2), weighted cos^2 gamma/2 (even) and sin^2 gamma/2 (odd).
/// Without field it matches zero_field_target up to diagonal local phases.
DensityMatrix field_target(const ExperimentConfig &cfg, double t);

/// The 4-qubit circuit whose qubits 2, 3 end in the target at time t.
Circuit time_point_circuit(const ExperimentConfig &cfg, double t);
DensityMatrix time_point_target(const ExperimentConfig &cfg, double t);

/// Reduced state of qubits 2, 3 after the circuit acts on |0000> under `nm`.
DensityMatrix prepared_pair(const Circuit &c, const NoiseModel &nm);

struct TetraPoint {
    Probabilities4 p{};
    double c_analytic = 0.0;
    double c_noisy = 0.0;
    double c_shot = 0.0;
    double leakage = 0.0;  // of the noisy pair state
};

TetraPoint tetra_point(const ExperimentConfig &cfg, const Probabilities4 &p, std::uint64_t seed);

struct ConcurrencePoint {
    double t = 0.0;
    double c_analytic = 0.0;
    double c_reconstructed = 0.0;
};

ConcurrencePoint concurrence_point(const ExperimentConfig &cfg, double t, std::uint64_t seed);

struct FidelityPoint {
    double t = 0.0;
    RobustnessReport report;
};

FidelityPoint fidelity_point(const ExperimentConfig &cfg, double t, std::uint64_t seed);

/// Rows of JSON scalars; strings render bare in CSV, numbers with 12 significant digits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
};

/// Point k of every sweep uses derive_seed(cfg.seed, k).
Table run_tetra_sweep(const ExperimentConfig &cfg);
Table run_concurrence_experiment(const ExperimentConfig &cfg);
Table run_fidelity_experiment(const ExperimentConfig &cfg);
Json run_xprep_single(const ExperimentConfig &cfg);

/// Dispatches on cfg.experiment and renders in cfg.format. CSV opens with one '#'
/// provenance line; JSON echoes the effective config and noise model.
std::string run_experiment(const ExperimentConfig &cfg);

/// [{index, point, circuit}] for every circuit the experiment would execute.
Json dump_circuits(const ExperimentConfig &cfg);

std::string render_csv(const ExperimentConfig &cfg, const Table &table);

}  // namespace xsim

#endif
