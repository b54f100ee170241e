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

#ifndef XSIM_TOMOGRAPHY_HPP
#define XSIM_TOMOGRAPHY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xsim/matrix.hpp"
#include "xsim/xstate.hpp"

namespace xsim {

/// Local Pauli measured on one qubit. Values index pauli().
enum class PauliAxis { X = 1, Y = 2, Z = 3 };

struct ObservableSetting {
    PauliAxis first = PauliAxis::Z;
    PauliAxis second = PauliAxis::Z;

    std::string label() const;
    friend bool operator==(const ObservableSetting &, const ObservableSetting &) = default;
};

/// Throws ConfigError for anything but two letters from {X, Y, Z}.
ObservableSetting parse_setting(std::string_view label);

enum class Protocol { Full, Partial5, Partial3 };

std::string_view protocol_name(Protocol p);
/// Full: all 9 pairs. Partial5: XX, YY, ZZ, XY, YX. Partial3: XX, YY, ZZ.
const std::vector<ObservableSetting> &protocol_settings(Protocol p);

/// Outcome order is (++, +-, -+, --), first qubit first; + is the +1 eigenvalue.
struct ShotRecord {
    ObservableSetting setting;
    std::uint64_t shots = 0;
    std::array<std::uint64_t, 4> counts{};
};

/// Outcome distribution of one setting, either exact or estimated from counts.
struct SettingData {
    ObservableSetting setting;
    std::array<double, 4> probabilities{};
};

SettingData from_counts(const ShotRecord &rec);
/// Tr(rho Pi_s1 x Pi_s2) for every outcome pair.
SettingData exact_setting(const DensityMatrix &rho, const ObservableSetting &setting);

/// Throws ContractViolation if shots == 0 or rho is not 4x4.
ShotRecord sample_setting(const DensityMatrix &rho, const ObservableSetting &setting, std::uint64_t shots,
                          std::uint64_t seed);

struct Expectations {
    double joint = 0.0;
    double first = 0.0;
    double second = 0.0;
};

Expectations expectations(const SettingData &data);
Expectations expectations_from_counts(const ShotRecord &rec);

/// (1/4) sum_ij T_ij s_i x s_j with single-qubit terms averaged over the three settings
/// that contain them. Not projected. Throws ProtocolError unless all 9 settings appear once.
ComplexMatrix linear_inversion_full(const std::vector<SettingData> &data);
DensityMatrix reconstruct_full(const std::vector<SettingData> &data);

/// Populations from ZZ; Re w = (XX - YY)/4, Re z = (XX + YY)/4, Im w = -(XY + YX)/4,
/// Im z = (XY - YX)/4. Coherences are scaled back onto the PSD boundary if needed.
XState reconstruct_x5(const std::vector<SettingData> &data);
/// As reconstruct_x5 with Im w = Im z = 0.
XState reconstruct_x3(const std::vector<SettingData> &data);

/// Drops negative eigenvalues from the bottom up and spreads their mass uniformly over
/// the rest. Input must be Hermitian with unit trace within 1e-10.
DensityMatrix psd_project(const ComplexMatrix &rho_hat);

struct TomographyReport {
    Protocol protocol = Protocol::Full;
    DensityMatrix reconstructed = DensityMatrix::maximally_mixed(4);
    double fidelity = 0.0;
    double concurrence = 0.0;
    double leakage = 0.0;  // of the reconstruction
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

struct TomographyOptions {
    std::uint64_t shots = 8000;  // 0 selects exact probabilities
    std::uint64_t seed = 0;
    double p_readout = 0.0;
    std::vector<Protocol> protocols{Protocol::Full, Protocol::Partial5, Protocol::Partial3};
};

/// Measurement data for one protocol. Settings of protocol k draw from
/// derive_seed(derive_seed(seed, k), j) with j the setting index.
std::vector<SettingData> measure(const DensityMatrix &rho, Protocol protocol, const TomographyOptions &opts);

TomographyReport tomography(const DensityMatrix &target, const DensityMatrix &measured, Protocol protocol,
                            const TomographyOptions &opts);

struct RobustnessReport {
    std::vector<TomographyReport> reports;  // in options.protocols order
    double input_leakage = 0.0;

    /// nullopt when the protocol was not run.
    std::optional<double> fidelity(Protocol p) const;
};

RobustnessReport robustness_report(const DensityMatrix &target, const DensityMatrix &noisy,
                                   const TomographyOptions &opts);

}  // namespace xsim

#endif
