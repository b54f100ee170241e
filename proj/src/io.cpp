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

#include "xsim/io.hpp"

#include <algorithm>
#include <cstdio>

#include "xsim/errors.hpp"

namespace xsim {

namespace {

double number(const Json &j, const char *key, double fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_number()) {
        throw ConfigError(std::string("field '") + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

double required(const Json &j, const char *key) {
    if (!j.contains(key)) {
        throw ConfigError(std::string("missing field '") + key + "'");
    }
    return number(j, key, 0.0);
}

}  // namespace

std::string format_double(double v) {
    if (v == 0.0) {
        return "0";  // folds -0
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void reject_unknown_keys(const Json &j, std::initializer_list<std::string_view> allowed, std::string_view where) {
    if (!j.is_object()) {
        throw ConfigError(std::string(where) + " must be a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError("unknown key '" + key + "' in " + std::string(where));
        }
    }
}

Json to_json(const XState &x) {
    return {{"a", x.a},           {"b", x.b},           {"c", x.c},           {"d", x.d},
            {"w_re", x.w.real()}, {"w_im", x.w.imag()}, {"z_re", x.z.real()}, {"z_im", x.z.imag()}};
}

XState xstate_from_json(const Json &j) {
    reject_unknown_keys(j, {"a", "b", "c", "d", "w_re", "w_im", "z_re", "z_im"}, "XState");
    XState x;
    x.a = required(j, "a");
    x.b = required(j, "b");
    x.c = required(j, "c");
    x.d = required(j, "d");
    x.w = Complex(number(j, "w_re", 0.0), number(j, "w_im", 0.0));
    x.z = Complex(number(j, "z_re", 0.0), number(j, "z_im", 0.0));
    return x;
}

Json to_json(const XSpectral &s) { return {{"p", s.p}, {"theta", s.theta}, {"phi", s.phi}}; }

XSpectral xspectral_from_json(const Json &j) {
    reject_unknown_keys(j, {"p", "theta", "phi"}, "XSpectral");
    if (!j.contains("p") || !j.at("p").is_array() || j.at("p").size() != 4) {
        throw ConfigError("XSpectral needs p as an array of 4 numbers");
    }
    XSpectral s;
    for (std::size_t k = 0; k < 4; ++k) {
        if (!j.at("p").at(k).is_number()) {
            throw ConfigError("XSpectral p entries must be numbers");
        }
        s.p[k] = j.at("p").at(k).get<double>();
    }
    s.theta = required(j, "theta");
    s.phi = required(j, "phi");
    return s;
}

Json to_json(const HeisenbergParams &p) { return {{"Jx", p.Jx}, {"Jy", p.Jy}, {"Jz", p.Jz}, {"B", p.B}, {"b", p.b}}; }

HeisenbergParams heisenberg_from_json(const Json &j) {
    reject_unknown_keys(j, {"Jx", "Jy", "Jz", "B", "b"}, "HeisenbergParams");
    return {number(j, "Jx", 0.0), number(j, "Jy", 0.0), number(j, "Jz", 0.0), number(j, "B", 0.0), number(j, "b", 0.0)};
}

Json to_json(const NoiseModel &nm) {
    return {{"p_depol_1q", nm.p_depol_1q},
            {"p_depol_2q", nm.p_depol_2q},
            {"gamma_ad", nm.gamma_ad},
            {"gamma_pd", nm.gamma_pd},
            {"p_readout", nm.p_readout}};
}

NoiseModel noise_from_json(const Json &j) {
    reject_unknown_keys(j, {"p_depol_1q", "p_depol_2q", "gamma_ad", "gamma_pd", "p_readout"}, "noise");
    NoiseModel nm;
    nm.p_depol_1q = number(j, "p_depol_1q", nm.p_depol_1q);
    nm.p_depol_2q = number(j, "p_depol_2q", nm.p_depol_2q);
    nm.gamma_ad = number(j, "gamma_ad", nm.gamma_ad);
    nm.gamma_pd = number(j, "gamma_pd", nm.gamma_pd);
    nm.p_readout = number(j, "p_readout", nm.p_readout);
    try {
        validate(nm);
    } catch (const ContractViolation &e) {
        throw ConfigError(std::string("noise: ") + e.what());
    }
    return nm;
}

Json to_json(const Circuit &c) {
    Json gates = Json::array();
    for (const auto &g : c.gates()) {
        Json params = Json::array();
        if (g.kind == GateKind::GENERIC_1Q) {
            for (const auto &v : g.payload->data()) {
                params.push_back(v.real());
                params.push_back(v.imag());
            }
        } else if (g.kind != GateKind::CNOT && g.kind != GateKind::PAULI_Z) {
            params.push_back(g.param);
        }
        Json entry = {{"kind", std::string(gate_kind_name(g.kind))}, {"params", params}, {"target", g.target}};
        if (g.control) {
            entry["control"] = *g.control;
        }
        gates.push_back(std::move(entry));
    }
    return {{"width", c.width()}, {"gates", gates}};
}

Circuit circuit_from_json(const Json &j) {
    reject_unknown_keys(j, {"width", "gates"}, "circuit");
    if (!j.contains("width") || !j.at("width").is_number_integer()) {
        throw ConfigError("circuit needs an integer width");
    }
    Circuit c(j.at("width").get<int>());
    if (!j.contains("gates") || !j.at("gates").is_array()) {
        throw ConfigError("circuit needs a gates array");
    }
    for (const auto &entry : j.at("gates")) {
        reject_unknown_keys(entry, {"kind", "params", "target", "control"}, "gate");
        if (!entry.contains("kind") || !entry.at("kind").is_string() || !entry.contains("target")) {
            throw ConfigError("gate needs kind and target");
        }
        Gate g;
        g.kind = parse_gate_kind(entry.at("kind").get<std::string>());
        g.target = entry.at("target").get<int>();
        if (entry.contains("control")) {
            g.control = entry.at("control").get<int>();
        }
        std::vector<double> params;
        if (entry.contains("params")) {
            params = entry.at("params").get<std::vector<double>>();
        }
        if (g.kind == GateKind::GENERIC_1Q) {
            if (params.size() != 8) {
                throw ConfigError("GENERIC_1Q needs 8 params");
            }
            ComplexMatrix m(2, 2);
            for (std::size_t k = 0; k < 4; ++k) {
                m(k / 2, k % 2) = Complex(params[2 * k], params[2 * k + 1]);
            }
            g.payload = m;
        } else if (g.kind == GateKind::CNOT || g.kind == GateKind::PAULI_Z) {
            if (!params.empty()) {
                throw ConfigError("gate " + std::string(gate_kind_name(g.kind)) + " takes no params");
            }
        } else {
            if (params.size() != 1) {
                throw ConfigError("gate " + std::string(gate_kind_name(g.kind)) + " takes one param");
            }
            g.param = params[0];
        }
        if (g.kind == GateKind::CNOT && !g.control) {
            throw ConfigError("CNOT needs a control");
        }
        c.append(std::move(g));
    }
    return c;
}

Json to_json(const ComplexMatrix &m) {
    Json re = Json::array(), im = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json rr = Json::array(), ri = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            rr.push_back(m(r, c).real());
            ri.push_back(m(r, c).imag());
        }
        re.push_back(rr);
        im.push_back(ri);
    }
    return {{"re", re}, {"im", im}};
}

Json to_json(const TomographyReport &r) {
    return {{"protocol", std::string(protocol_name(r.protocol))},
            {"fidelity", r.fidelity},
            {"concurrence_estimate", r.concurrence},
            {"leakage", r.leakage},
            {"shots", r.shots},
            {"seed", r.seed},
            {"reconstructed", to_json(r.reconstructed.matrix())}};
}

}  // namespace xsim
