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

#include "xsim/noise.hpp"

#include <cmath>
#include <string>

#include "xsim/errors.hpp"
#include "xsim/rng.hpp"

namespace xsim {

namespace {

constexpr double kCptpTol = 1e-10;

void check_probability(double v, const char *name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ContractViolation(std::string(name) + " must lie in [0, 1]");
    }
}

void check_cptp(const KrausSet &kraus, std::size_t dim) {
    if (kraus.empty()) {
        throw ContractViolation("empty Kraus set");
    }
    ComplexMatrix sum(dim, dim);
    for (const auto &k : kraus) {
        if (k.rows() != dim || k.cols() != dim) {
            throw DimensionError("Kraus operator size does not match the target qubits");
        }
        sum += k.adjoint() * k;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(dim)) > kCptpTol) {
        throw ContractViolation("Kraus set is not trace preserving");
    }
}

void apply_kraus(ComplexMatrix &m, const KrausSet &kraus, std::span<const int> qubits) {
    ComplexMatrix out(m.rows(), m.cols());
    for (const auto &k : kraus) {
        ComplexMatrix term = m;
        apply_left(k, qubits, term);
        apply_right_adjoint(k, qubits, term);
        out += term;
    }
    m = std::move(out);
}

}  // namespace

void validate(const NoiseModel &nm) {
    check_probability(nm.p_depol_1q, "p_depol_1q");
    check_probability(nm.p_depol_2q, "p_depol_2q");
    check_probability(nm.gamma_ad, "gamma_ad");
    check_probability(nm.gamma_pd, "gamma_pd");
    check_probability(nm.p_readout, "p_readout");
}

KrausSet depolarizing_1q(double p) {
    check_probability(p, "depolarizing probability");
    KrausSet k;
    k.push_back(pauli(0) * Complex(std::sqrt(1.0 - 0.75 * p)));
    for (int i = 1; i < 4; ++i) {
        k.push_back(pauli(i) * Complex(std::sqrt(p / 4.0)));
    }
    return k;
}

KrausSet depolarizing_2q(double p) {
    check_probability(p, "depolarizing probability");
    KrausSet k;
    k.push_back(ComplexMatrix::identity(4) * Complex(std::sqrt(1.0 - 15.0 * p / 16.0)));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != 0 || j != 0) {
                k.push_back(kron(pauli(i), pauli(j)) * Complex(std::sqrt(p / 16.0)));
            }
        }
    }
    return k;
}

KrausSet amplitude_damping(double gamma) {
    check_probability(gamma, "amplitude damping rate");
    return {ComplexMatrix{{1, 0}, {0, std::sqrt(1.0 - gamma)}}, ComplexMatrix{{0, std::sqrt(gamma)}, {0, 0}}};
}

KrausSet phase_damping(double gamma) {
    check_probability(gamma, "phase damping rate");
    return {ComplexMatrix{{1, 0}, {0, std::sqrt(1.0 - gamma)}}, ComplexMatrix{{0, 0}, {0, std::sqrt(gamma)}}};
}

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausSet &kraus, std::span<const int> qubits) {
    check_cptp(kraus, std::size_t{1} << qubits.size());
    ComplexMatrix m = rho.matrix();
    apply_kraus(m, kraus, qubits);
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix run_noisy(const Circuit &c, const DensityMatrix &input, const NoiseModel &nm) {
    validate(nm);
    if (input.dim() != (std::size_t{1} << c.width())) {
        throw DimensionError("run_noisy: state dimension does not match circuit width");
    }
    const KrausSet depol1 = depolarizing_1q(nm.p_depol_1q);
    const KrausSet depol2 = depolarizing_2q(nm.p_depol_2q);
    const KrausSet damp = amplitude_damping(nm.gamma_ad);
    const KrausSet dephase = phase_damping(nm.gamma_pd);
    ComplexMatrix m = input.matrix();
    for (const auto &g : c.gates()) {
        const auto op = g.local_matrix();
        const auto qs = g.qubits();
        apply_left(op, qs, m);
        apply_right_adjoint(op, qs, m);
        const bool two = qs.size() == 2;
        if (two && nm.p_depol_2q > 0.0) {
            apply_kraus(m, depol2, qs);
        }
        if (!two && nm.p_depol_1q > 0.0) {
            apply_kraus(m, depol1, qs);
        }
        for (int q : qs) {
            const int one[] = {q};
            if (nm.gamma_ad > 0.0) {
                apply_kraus(m, damp, one);
            }
            if (nm.gamma_pd > 0.0) {
                apply_kraus(m, dephase, one);
            }
        }
    }
    return DensityMatrix::from_matrix(std::move(m));
}

ShotRecord readout_flip(const ShotRecord &rec, double p, std::uint64_t seed) {
    check_probability(p, "readout flip probability");
    if (p == 0.0) {
        return rec;
    }
    // Independent flips of the two bits, drawn jointly as one XOR mask per shot.
    const double q = 1.0 - p;
    const double mask_weights[] = {q * q, q * p, p * q, p * p};
    const CategoricalTable mask(mask_weights);
    Rng rng(seed);
    ShotRecord out{rec.setting, rec.shots, {}};
    for (std::size_t outcome = 0; outcome < 4; ++outcome) {
        for (std::uint64_t n = 0; n < rec.counts[outcome]; ++n) {
            ++out.counts[outcome ^ mask(rng)];
        }
    }
    return out;
}

SettingData readout_flip_exact(const SettingData &data, double p) {
    check_probability(p, "readout flip probability");
    SettingData out{data.setting, {}};
    for (int from = 0; from < 4; ++from) {
        for (int to = 0; to < 4; ++to) {
            const int diff = from ^ to;
            const double first = (diff & 2) ? p : 1.0 - p;
            const double second = (diff & 1) ? p : 1.0 - p;
            out.probabilities[to] += data.probabilities[from] * first * second;
        }
    }
    return out;
}

}  // namespace xsim
