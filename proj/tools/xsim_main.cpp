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

// xsim <experiment> --config <path> [--out <path>] [--format csv|json] [--seed N]
//      [--shots N] [--exact] [--dump-circuit]
//
// Exit codes: 0 success, 1 I/O failure, 2 configuration error, 3 contract violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "xsim/errors.hpp"
#include "xsim/experiments.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitContract = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

xsim::Json read_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw xsim::ConfigError("cannot open config file '" + path + "'");
    }
    try {
        return xsim::Json::parse(in);
    } catch (const xsim::Json::parse_error &e) {
        throw xsim::ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) {
        throw IoError("cannot write output file '" + path + "'");
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Preparation, evolution and tomography of two-qubit X-states"};
    std::string experiment;
    std::string config_path;
    std::optional<std::string> out_path;
    std::optional<std::string> format;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    bool exact = false;
    bool dump = false;

    app.add_option("experiment", experiment, "tetra_sweep, heisenberg_conc, heisenberg_fidelity, field_conc, "
                                             "field_fidelity or xprep_single")
        ->required();
    app.add_option("--config", config_path, "JSON experiment config")->required();
    app.add_option("--out", out_path, "Output file; stdout when omitted");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--shots", shots, "Shots per measurement setting");
    app.add_flag("--exact", exact, "Exact outcome probabilities instead of shot sampling");
    app.add_flag("--dump-circuit", dump, "Print the circuits as JSON and skip the run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        xsim::ExperimentConfig cfg = xsim::parse_config(read_config(config_path));
        if (cfg.experiment != xsim::parse_experiment(experiment)) {
            throw xsim::ConfigError("config describes '" + std::string(xsim::experiment_name(cfg.experiment)) +
                                    "' but '" + experiment + "' was requested");
        }
        if (out_path) {
            cfg.output_path = *out_path;
        }
        if (format) {
            cfg.format = *format == "csv" ? xsim::OutputFormat::Csv : xsim::OutputFormat::Json;
        }
        if (seed) {
            cfg.seed = *seed;
        }
        if (shots) {
            cfg.shots = *shots;
        }
        cfg.exact = cfg.exact || exact;
        xsim::validate_config(cfg);

        if (dump) {
            write_output(cfg.output_path, xsim::dump_circuits(cfg).dump(2) + "\n");
        } else {
            write_output(cfg.output_path, xsim::run_experiment(cfg));
        }
        return 0;
    } catch (const xsim::ConfigError &e) {
        std::cerr << "xsim: config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const xsim::ContractViolation &e) {
        std::cerr << "xsim: contract violation: " << e.what() << '\n';
        return kExitContract;
    } catch (const std::exception &e) {
        std::cerr << "xsim: " << e.what() << '\n';
        return kExitIo;
    }
}
