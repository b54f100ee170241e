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

#ifndef XSIM_NOISE_HPP
#define XSIM_NOISE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "xsim/circuit.hpp"
#include "xsim/matrix.hpp"
#include "xsim/tomography.hpp"

namespace xsim {

/// Per-gate noise. After every gate the touched qubits see a depolarizing channel
/// (two-qubit for CNOT), then amplitude damping and phase damping on each qubit.
/// Readout flips act on measured bits only.
struct NoiseModel {
    double p_depol_1q = 0.001;
    double p_depol_2q = 0.01;
    double gamma_ad = 0.001;
    double gamma_pd = 0.001;
    double p_readout = 0.02;

    static NoiseModel none() { return {0.0, 0.0, 0.0, 0.0, 0.0}; }
};

/// Throws ContractViolation unless every field lies in [0, 1].
void validate(const NoiseModel &nm);

using KrausSet = std::vector<ComplexMatrix>;

/// rho -> (1 - p) rho + p I/2.
KrausSet depolarizing_1q(double p);
/// rho -> (1 - p) rho + p I/4 on a qubit pair.
KrausSet depolarizing_2q(double p);
KrausSet amplitude_damping(double gamma);
KrausSet phase_damping(double gamma);

/// sum_k K rho K^dagger with each K acting on `qubits`. Throws ContractViolation unless
/// sum_k K^dagger K = I within 1e-10.
DensityMatrix apply_channel(const DensityMatrix &rho, const KrausSet &kraus, std::span<const int> qubits);

DensityMatrix run_noisy(const Circuit &c, const DensityMatrix &input, const NoiseModel &nm);

/// Flips each recorded bit independently with probability p.
ShotRecord readout_flip(const ShotRecord &rec, double p, std::uint64_t seed);
/// Exact image of an outcome distribution under independent bit flips.
SettingData readout_flip_exact(const SettingData &data, double p);

}  // namespace xsim

#endif
