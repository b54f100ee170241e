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

#include "xsim/tomography.hpp"

#include <algorithm>
#include <cmath>

#include "xsim/errors.hpp"
#include "xsim/noise.hpp"
#include "xsim/rng.hpp"

namespace xsim {

namespace {

constexpr std::array<std::string_view, 3> kProtocolNames = {"FULL", "PARTIAL5", "PARTIAL3"};

char axis_letter(PauliAxis a) { return "IXYZ"[static_cast<int>(a)]; }

// Eigenprojector (I + sign s) / 2 of a Pauli.
ComplexMatrix projector(PauliAxis axis, int sign) {
    return (ComplexMatrix::identity(2) + pauli(static_cast<int>(axis)) * Complex(sign)) * Complex(0.5);
}

// One entry per requested setting, in the protocol's order; throws on missing or repeated ones.
std::vector<const SettingData *> collect(const std::vector<SettingData> &data, Protocol protocol) {
    const auto &wanted = protocol_settings(protocol);
    std::vector<const SettingData *> out(wanted.size(), nullptr);
    for (const auto &d : data) {
        auto it = std::find(wanted.begin(), wanted.end(), d.setting);
        if (it == wanted.end()) {
            throw ProtocolError("setting " + d.setting.label() + " is not part of " +
                                std::string(protocol_name(protocol)));
        }
        auto &slot = out[it - wanted.begin()];
        if (slot) {
            throw ProtocolError("setting " + d.setting.label() + " given twice");
        }
        slot = &d;
    }
    for (std::size_t k = 0; k < wanted.size(); ++k) {
        if (!out[k]) {
            throw ProtocolError("missing setting " + wanted[k].label() + " for " + std::string(protocol_name(protocol)));
        }
    }
    return out;
}

// Shrinks a coherence onto the PSD boundary of its block.
Complex clamp_coherence(Complex v, double p, double q) {
    const double bound = std::sqrt(std::max(0.0, p * q));
    const double mag = std::abs(v);
    return mag > bound ? v * (bound / mag) : v;
}

XState reconstruct_x(const std::vector<SettingData> &data, Protocol protocol) {
    const auto rec = collect(data, protocol);
    // protocol order: XX, YY, ZZ, then XY, YX for Partial5.
    const double xx = expectations(*rec[0]).joint;
    const double yy = expectations(*rec[1]).joint;
    const auto &zz = rec[2]->probabilities;
    double total = zz[0] + zz[1] + zz[2] + zz[3];
    XState x;
    x.a = zz[0] / total;
    x.b = zz[1] / total;
    x.c = zz[2] / total;
    x.d = zz[3] / total;
    double wi = 0.0, zi = 0.0;
    if (protocol == Protocol::Partial5) {
        const double xy = expectations(*rec[3]).joint;
        const double yx = expectations(*rec[4]).joint;
        wi = -(xy + yx) / 4.0;
        zi = (xy - yx) / 4.0;
    }
    x.w = clamp_coherence(Complex((xx - yy) / 4.0, wi), x.a, x.d);
    x.z = clamp_coherence(Complex((xx + yy) / 4.0, zi), x.b, x.c);
    return x;
}

double report_concurrence(const DensityMatrix &rho, Protocol protocol) {
    if (protocol == Protocol::Full) {
        return concurrence_wootters_oracle(rho);
    }
    return concurrence_x(from_density(rho));
}

}  // namespace

std::string ObservableSetting::label() const { return {axis_letter(first), axis_letter(second)}; }

ObservableSetting parse_setting(std::string_view label) {
    auto axis = [&](char ch) {
        switch (ch) {
            case 'X':
                return PauliAxis::X;
            case 'Y':
                return PauliAxis::Y;
            case 'Z':
                return PauliAxis::Z;
        }
        throw ConfigError("bad observable setting '" + std::string(label) + "'");
    };
    if (label.size() != 2) {
        throw ConfigError("bad observable setting '" + std::string(label) + "'");
    }
    return {axis(label[0]), axis(label[1])};
}

std::string_view protocol_name(Protocol p) { return kProtocolNames[static_cast<int>(p)]; }

const std::vector<ObservableSetting> &protocol_settings(Protocol p) {
    using A = PauliAxis;
    static const std::vector<ObservableSetting> full = {
        {A::X, A::X}, {A::X, A::Y}, {A::X, A::Z}, {A::Y, A::X}, {A::Y, A::Y},
        {A::Y, A::Z}, {A::Z, A::X}, {A::Z, A::Y}, {A::Z, A::Z},
    };
    static const std::vector<ObservableSetting> partial5 = {
        {A::X, A::X}, {A::Y, A::Y}, {A::Z, A::Z}, {A::X, A::Y}, {A::Y, A::X},
    };
    static const std::vector<ObservableSetting> partial3 = {{A::X, A::X}, {A::Y, A::Y}, {A::Z, A::Z}};
    switch (p) {
        case Protocol::Full:
            return full;
        case Protocol::Partial5:
            return partial5;
        case Protocol::Partial3:
            return partial3;
    }
    throw ContractViolation("unknown protocol");
}

SettingData from_counts(const ShotRecord &rec) {
    std::uint64_t total = 0;
    for (auto n : rec.counts) {
        total += n;
    }
    if (rec.shots == 0 || total != rec.shots) {
        throw ContractViolation("shot record counts must sum to a positive shot number");
    }
    SettingData d{rec.setting, {}};
    for (int k = 0; k < 4; ++k) {
        d.probabilities[k] = static_cast<double>(rec.counts[k]) / static_cast<double>(rec.shots);
    }
    return d;
}

SettingData exact_setting(const DensityMatrix &rho, const ObservableSetting &setting) {
    if (rho.dim() != 4) {
        throw DimensionError("measurement settings act on two-qubit states");
    }
    SettingData d{setting, {}};
    const int signs[2] = {1, -1};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const auto proj = kron(projector(setting.first, signs[i]), projector(setting.second, signs[j]));
            d.probabilities[2 * i + j] = std::max(0.0, (rho.matrix() * proj).trace().real());
        }
    }
    return d;
}

ShotRecord sample_setting(const DensityMatrix &rho, const ObservableSetting &setting, std::uint64_t shots,
                          std::uint64_t seed) {
    if (shots == 0) {
        throw ContractViolation("sample_setting needs at least one shot");
    }
    const auto exact = exact_setting(rho, setting);
    const CategoricalTable table(exact.probabilities);
    Rng rng(seed);
    ShotRecord rec{setting, shots, {}};
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++rec.counts[table(rng)];
    }
    return rec;
}

Expectations expectations(const SettingData &data) {
    const auto &p = data.probabilities;
    return {p[0] - p[1] - p[2] + p[3], p[0] + p[1] - p[2] - p[3], p[0] - p[1] + p[2] - p[3]};
}

Expectations expectations_from_counts(const ShotRecord &rec) { return expectations(from_counts(rec)); }

ComplexMatrix linear_inversion_full(const std::vector<SettingData> &data) {
    const auto rec = collect(data, Protocol::Full);
    double t[4][4] = {};
    t[0][0] = 1.0;
    for (const auto *d : rec) {
        const int i = static_cast<int>(d->setting.first);
        const int j = static_cast<int>(d->setting.second);
        const auto e = expectations(*d);
        t[i][j] = e.joint;
        t[i][0] += e.first / 3.0;
        t[0][j] += e.second / 3.0;
    }
    ComplexMatrix rho(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (t[i][j] != 0.0) {
                rho += kron(pauli(i), pauli(j)) * Complex(0.25 * t[i][j]);
            }
        }
    }
    return rho;
}

DensityMatrix reconstruct_full(const std::vector<SettingData> &data) { return psd_project(linear_inversion_full(data)); }

XState reconstruct_x5(const std::vector<SettingData> &data) { return reconstruct_x(data, Protocol::Partial5); }

XState reconstruct_x3(const std::vector<SettingData> &data) { return reconstruct_x(data, Protocol::Partial3); }

DensityMatrix psd_project(const ComplexMatrix &rho_hat) {
    if (!rho_hat.square() || !is_hermitian(rho_hat, 1e-10)) {
        throw ContractViolation("psd_project needs a Hermitian matrix");
    }
    const double tr = rho_hat.trace().real();
    if (std::abs(tr - 1.0) > 1e-10) {
        throw ContractViolation("psd_project needs unit trace within 1e-10");
    }
    auto eig = herm_eig(rho_hat * Complex(1.0 / tr));
    auto &lam = eig.values;  // descending
    std::size_t keep = lam.size();
    double removed = 0.0;
    while (keep > 0 && lam[keep - 1] + removed / static_cast<double>(keep) < 0.0) {
        removed += lam[keep - 1];
        lam[keep - 1] = 0.0;
        --keep;
    }
    for (std::size_t k = 0; k < keep; ++k) {
        lam[k] += removed / static_cast<double>(keep);
    }
    const std::size_t n = lam.size();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (lam[k] == 0.0) {
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += lam[k] * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
            }
        }
    }
    return DensityMatrix::from_matrix(std::move(out));
}

std::vector<SettingData> measure(const DensityMatrix &rho, Protocol protocol, const TomographyOptions &opts) {
    const auto &settings = protocol_settings(protocol);
    const std::uint64_t base = derive_seed(opts.seed, static_cast<std::uint64_t>(protocol));
    std::vector<SettingData> out;
    out.reserve(settings.size());
    for (std::size_t j = 0; j < settings.size(); ++j) {
        if (opts.shots == 0) {
            out.push_back(readout_flip_exact(exact_setting(rho, settings[j]), opts.p_readout));
            continue;
        }
        const std::uint64_t stream = derive_seed(base, j);
        auto rec = sample_setting(rho, settings[j], opts.shots, stream);
        if (opts.p_readout > 0.0) {
            rec = readout_flip(rec, opts.p_readout, derive_seed(stream, 1));
        }
        out.push_back(from_counts(rec));
    }
    return out;
}

TomographyReport tomography(const DensityMatrix &target, const DensityMatrix &measured, Protocol protocol,
                            const TomographyOptions &opts) {
    const auto data = measure(measured, protocol, opts);
    TomographyReport r;
    r.protocol = protocol;
    switch (protocol) {
        case Protocol::Full:
            r.reconstructed = reconstruct_full(data);
            break;
        case Protocol::Partial5:
            r.reconstructed = to_density(reconstruct_x5(data));
            break;
        case Protocol::Partial3:
            r.reconstructed = to_density(reconstruct_x3(data));
            break;
    }
    r.fidelity = fidelity(target, r.reconstructed);
    r.concurrence = report_concurrence(r.reconstructed, protocol);
    r.leakage = leakage(r.reconstructed);
    r.shots = opts.shots;
    r.seed = opts.seed;
    return r;
}

std::optional<double> RobustnessReport::fidelity(Protocol p) const {
    for (const auto &r : reports) {
        if (r.protocol == p) {
            return r.fidelity;
        }
    }
    return std::nullopt;
}

RobustnessReport robustness_report(const DensityMatrix &target, const DensityMatrix &noisy,
                                   const TomographyOptions &opts) {
    RobustnessReport out;
    out.input_leakage = leakage(noisy);
    for (auto p : opts.protocols) {
        out.reports.push_back(tomography(target, noisy, p, opts));
    }
    return out;
}

}  // namespace xsim
