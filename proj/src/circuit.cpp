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

#include "xsim/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xsim/errors.hpp"

namespace xsim {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 8> kGateNames = {{
    {GateKind::RX, "RX"},
    {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},
    {GateKind::U_LAMBDA, "U_LAMBDA"},
    {GateKind::W, "W"},
    {GateKind::PAULI_Z, "PAULI_Z"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::GENERIC_1Q, "GENERIC_1Q"},
}};

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    for (const auto &[k, name] : kGateNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view name) {
    for (const auto &[k, n] : kGateNames) {
        if (n == name) {
            return k;
        }
    }
    throw ConfigError("unknown gate kind '" + std::string(name) + "'");
}

std::vector<int> Gate::qubits() const {
    if (kind == GateKind::CNOT) {
        return {control.value_or(-1), target};
    }
    return {target};
}

ComplexMatrix Gate::local_matrix() const {
    const double c = std::cos(param / 2.0);
    const double s = std::sin(param / 2.0);
    switch (kind) {
        case GateKind::RX:
            return {{c, -kI * s}, {-kI * s, c}};
        case GateKind::RY:
            return {{c, -s}, {s, c}};
        case GateKind::RZ:
            return ComplexMatrix::diagonal({std::exp(-kI * (param / 2.0)), std::exp(kI * (param / 2.0))});
        case GateKind::U_LAMBDA: {
            if (param < -1.0 || param > 1.0) {
                throw ContractViolation("U_LAMBDA parameter must lie in [-1, 1]");
            }
            const double plus = std::sqrt((1.0 + param) / 2.0);
            const double minus = std::sqrt((1.0 - param) / 2.0);
            return {{plus, -minus}, {minus, plus}};
        }
        case GateKind::W:
            return ComplexMatrix::diagonal({std::exp(-kI * param), kI * std::exp(kI * param)});
        case GateKind::PAULI_Z:
            return pauli(3);
        case GateKind::CNOT:
            return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
        case GateKind::GENERIC_1Q:
            if (!payload) {
                throw ContractViolation("GENERIC_1Q gate without payload");
            }
            return *payload;
    }
    throw ContractViolation("unhandled gate kind");
}

Circuit::Circuit(int width) : width_(width) {
    if (width < 1 || width > 4) {
        throw DimensionError("circuit width must be in 1..4");
    }
}

Circuit &Circuit::append(Gate g) {
    const auto qs = g.qubits();
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (qs[i] < 0 || qs[i] >= width_) {
            throw DimensionError("gate qubit index out of range for circuit width " + std::to_string(width_));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qs[i] == qs[j]) {
                throw DimensionError("CNOT control and target must differ");
            }
        }
    }
    if (g.kind != GateKind::CNOT && g.control) {
        throw DimensionError("only CNOT carries a control qubit");
    }
    if (g.kind == GateKind::GENERIC_1Q) {
        if (!g.payload || g.payload->rows() != 2 || g.payload->cols() != 2) {
            throw DimensionError("GENERIC_1Q payload must be 2x2");
        }
        UnitaryMatrix::from_matrix(*g.payload);
    }
    gates_.push_back(std::move(g));
    return *this;
}

UnitaryMatrix gate_matrix(const Gate &g, int width) {
    const auto qs = g.qubits();
    return UnitaryMatrix::from_matrix(embed_operator(g.local_matrix(), qs, width));
}

UnitaryMatrix circuit_unitary(const Circuit &c) {
    ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << c.width());
    for (const auto &g : c.gates()) {
        apply_left(g.local_matrix(), g.qubits(), u);
    }
    return UnitaryMatrix::from_matrix(std::move(u));
}

std::vector<Complex> run_pure(const Circuit &c, std::size_t basis_index) {
    const std::size_t dim = std::size_t{1} << c.width();
    if (basis_index >= dim) {
        throw DimensionError("basis index out of range for circuit width");
    }
    std::vector<Complex> psi(dim);
    psi[basis_index] = 1.0;
    for (const auto &g : c.gates()) {
        apply_to_vector(g.local_matrix(), g.qubits(), psi);
    }
    return psi;
}

DensityMatrix run_density(const Circuit &c, const DensityMatrix &input) {
    if (input.dim() != (std::size_t{1} << c.width())) {
        throw DimensionError("run_density: state dimension does not match circuit width");
    }
    ComplexMatrix m = input.matrix();
    for (const auto &g : c.gates()) {
        const auto op = g.local_matrix();
        const auto qs = g.qubits();
        apply_left(op, qs, m);
        apply_right_adjoint(op, qs, m);
    }
    return DensityMatrix::from_matrix(std::move(m));
}

void validate_probabilities(const Probabilities4 &p) {
    double sum = 0.0;
    for (double x : p) {
        if (!(x >= -1e-12)) {
            throw ContractViolation("probabilities must be nonnegative");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ContractViolation("probabilities must sum to 1 within 1e-12");
    }
}

ClassicalBlockAngles classical_block_angles(const Probabilities4 &p) {
    validate_probabilities(p);
    auto root = [](double x) { return std::sqrt(std::max(x, 0.0)); };
    const double first_zero = std::clamp(p[0] + p[1], 0.0, 1.0);
    // Conditional rotations of qubit 1 given qubit 0 = 0 and = 1.
    const double g0 = 2.0 * std::atan2(root(p[1]), root(p[0]));
    const double g1 = 2.0 * std::atan2(root(p[3]), root(p[2]));
    ClassicalBlockAngles a;
    a.beta = 2.0 * std::acos(std::sqrt(first_zero));
    a.alpha = 0.5 * (g0 + g1);
    a.gamma = 0.5 * (g0 - g1);
    return a;
}

Circuit build_classical_block(const Probabilities4 &p) {
    const auto a = classical_block_angles(p);
    Circuit c(4);
    c.append(Gate::ry(0, a.beta));
    c.append(Gate::ry(1, a.alpha));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::ry(1, a.gamma));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::cnot(0, 2));
    c.append(Gate::cnot(1, 3));
    return c;
}

void append_xstate_block(Circuit &c, double theta, double phi, int first, int second) {
    c.append(Gate::ry(first, theta + phi));
    c.append(Gate::cnot(second, first));
    c.append(Gate::ry(first, theta - phi));
    c.append(Gate::cnot(first, second));
}

Circuit build_xstate_circuit(const Probabilities4 &p, double theta, double phi) {
    Circuit c = build_classical_block(p);
    append_xstate_block(c, theta, phi, 2, 3);
    return c;
}

Circuit build_xstate_circuit_alt(const Probabilities4 &p, double theta, double phi) {
    Circuit c = build_classical_block(p);
    c.append(Gate::ry(2, theta + phi));
    c.append(Gate::cnot(3, 2));
    c.append(Gate::ry(2, theta - phi));
    c.append(Gate::cnot(3, 2));
    c.append(Gate::cnot(2, 3));
    return c;
}

Circuit build_equi_entangled_circuit(const Probabilities4 &p, double theta) {
    Circuit c = build_classical_block(p);
    c.append(Gate::ry(2, 2.0 * theta));
    c.append(Gate::cnot(2, 3));
    return c;
}

Circuit build_sector_mixture_circuit(double lambda, double gamma, double theta, double phi) {
    if (lambda < -1.0 || lambda > 1.0) {
        throw ContractViolation("lambda must lie in [-1, 1]");
    }
    Circuit c(4);
    c.append(Gate::ry(0, 2.0 * std::acos(std::sqrt((1.0 + lambda) / 2.0))));
    c.append(Gate::ry(1, gamma));
    c.append(Gate::cnot(0, 2));
    c.append(Gate::cnot(1, 3));
    append_xstate_block(c, theta, phi, 2, 3);
    return c;
}

Circuit build_sector_circuit(double lambda, double theta) {
    Circuit c(2);
    c.append(Gate::u_lambda(0, lambda));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::rx(1, theta));
    return c;
}

UnitaryMatrix assemble_x_unitary(const XUnitaryParams &p) {
    auto e = [](double v) { return std::exp(kI * (0.5 * v)); };
    ComplexMatrix u(4, 4);
    u(0, 0) = e(p.a1 - p.x) * std::cos(p.t1);
    u(0, 3) = -e(p.b1 - p.x) * std::sin(p.t1);
    u(1, 1) = -kI * e(p.a2 + p.x) * std::sin(p.t2);
    u(1, 2) = kI * e(p.b2 + p.x) * std::cos(p.t2);
    u(2, 1) = kI * e(-(p.b2 - p.x)) * std::cos(p.t2);
    u(2, 2) = kI * e(-(p.a2 - p.x)) * std::sin(p.t2);
    u(3, 0) = e(-(p.b1 + p.x)) * std::sin(p.t1);
    u(3, 3) = e(-(p.a1 + p.x)) * std::cos(p.t1);
    return UnitaryMatrix::from_matrix(std::move(u));
}

std::array<double, 4> x_unitary_rz_angles(const XUnitaryParams &p) {
    return {
        -0.25 * (p.a1 + p.b1 + p.a2 + p.b2),
        -0.25 * (p.a1 + p.b1 - p.a2 - p.b2),
        -0.25 * (p.a2 - p.b2 + p.a1 - p.b1),
        -0.25 * (p.a1 - p.b1 - p.a2 + p.b2),
    };
}

void append_x_unitary(Circuit &c, const XUnitaryParams &p, int first, int second) {
    const auto s = x_unitary_rz_angles(p);
    c.append(Gate::rz(first, s[2]));
    c.append(Gate::rz(second, s[3]));
    c.append(Gate::cnot(first, second));
    c.append(Gate::ry(first, p.t1 - p.t2));
    c.append(Gate::cnot(second, first));
    c.append(Gate::ry(first, p.t1 + p.t2));
    // The W layer carries half the x of the assembled matrix.
    c.append(Gate::w(second, 0.5 * p.x));
    c.append(Gate::cnot(first, second));
    c.append(Gate::rz(first, s[0]));
    c.append(Gate::rz(second, s[1]));
}

Circuit decompose_x_unitary(const XUnitaryParams &p) {
    Circuit c(2);
    append_x_unitary(c, p, 0, 1);
    return c;
}

double global_phase_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("global_phase_distance: shape mismatch");
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < b.data().size(); ++k) {
        if (std::abs(b.data()[k]) > std::abs(b.data()[best])) {
            best = k;
        }
    }
    Complex phase = 1.0;
    if (std::abs(b.data()[best]) > 0.0 && std::abs(a.data()[best]) > 0.0) {
        phase = a.data()[best] / b.data()[best];
        phase /= std::abs(phase);
    }
    return max_abs_diff(a, b * phase);
}

}  // namespace xsim
