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

#ifndef XSIM_CIRCUIT_HPP
#define XSIM_CIRCUIT_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "xsim/matrix.hpp"

namespace xsim {

// Gate conventions. Qubit 0 is the most significant bit of a basis index, so
// |q0 q1 q2 q3> = |b3 b2 b1 b0>. All rotation gates are the SU(2) matrices below,
// never a convention name:
//
//   RX(t)       [[cos t/2, -i sin t/2], [-i sin t/2, cos t/2]]
//   RY(t)       [[cos t/2,   -sin t/2], [   sin t/2, cos t/2]]
//   RZ(t)       diag(e^{-it/2}, e^{it/2})
//   U_LAMBDA(l) (1/sqrt2) [[sqrt(1+l), -sqrt(1-l)], [sqrt(1-l), sqrt(1+l)]]
//   W(x)        diag(e^{-ix}, i e^{ix})
//   PAULI_Z     diag(1, -1)
//   CNOT        control/target given explicitly
//
// Circuits store gates in application order: the first gate in the list acts first.

enum class GateKind { RX, RY, RZ, U_LAMBDA, W, PAULI_Z, CNOT, GENERIC_1Q };

std::string_view gate_kind_name(GateKind kind);
/// Throws ConfigError on an unknown name.
GateKind parse_gate_kind(std::string_view name);

struct Gate {
    GateKind kind = GateKind::RY;
    double param = 0.0;
    int target = 0;
    std::optional<int> control;
    std::optional<ComplexMatrix> payload;  // GENERIC_1Q only

    static Gate rx(int target, double theta) { return {GateKind::RX, theta, target, {}, {}}; }
    static Gate ry(int target, double theta) { return {GateKind::RY, theta, target, {}, {}}; }
    static Gate rz(int target, double theta) { return {GateKind::RZ, theta, target, {}, {}}; }
    static Gate u_lambda(int target, double lambda) { return {GateKind::U_LAMBDA, lambda, target, {}, {}}; }
    static Gate w(int target, double x) { return {GateKind::W, x, target, {}, {}}; }
    static Gate pauli_z(int target) { return {GateKind::PAULI_Z, 0.0, target, {}, {}}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, 0.0, target, control, {}}; }
    static Gate generic(int target, ComplexMatrix u) { return {GateKind::GENERIC_1Q, 0.0, target, {}, std::move(u)}; }

    /// Qubits touched, control first for CNOT.
    std::vector<int> qubits() const;
    /// 2x2 matrix, or the 4x4 CNOT on (control, target).
    ComplexMatrix local_matrix() const;
};

class Circuit {
  public:
    explicit Circuit(int width);

    int width() const noexcept { return width_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }

    /// Validates qubit indices and payload unitarity; throws DimensionError / ContractViolation.
    Circuit &append(Gate g);

  private:
    int width_;
    std::vector<Gate> gates_;
};

/// Full 2^width unitary of one gate, identity on untouched qubits.
UnitaryMatrix gate_matrix(const Gate &g, int width);
/// Ordered product of all gate matrices (last gate leftmost).
UnitaryMatrix circuit_unitary(const Circuit &c);

std::vector<Complex> run_pure(const Circuit &c, std::size_t basis_index);
DensityMatrix run_density(const Circuit &c, const DensityMatrix &input);

using Probabilities4 = std::array<double, 4>;

/// Throws ContractViolation unless p >= 0 and sums to 1 within 1e-12.
void validate_probabilities(const Probabilities4 &p);

/// Angles of the classical-state block. beta = 2 arccos sqrt(p00 + p01) rotates qubit 0;
/// alpha and gamma realize the conditional split on qubit 1 around a CNOT pair.
struct ClassicalBlockAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

ClassicalBlockAngles classical_block_angles(const Probabilities4 &p);

/// First block alone: prepares sum_ij sqrt(p_ij) |ij>|ij> on 4 qubits.
Circuit build_classical_block(const Probabilities4 &p);

/// Two-qubit U(theta, phi) with U|i,j> = |psi_{i, i xor j}>, appended on (first, second).
void append_xstate_block(Circuit &c, double theta, double phi, int first, int second);

/// Full preparation circuit; tracing out qubits 0,1 leaves the real X-state of p, theta, phi.
Circuit build_xstate_circuit(const Probabilities4 &p, double theta, double phi);

/// Alternative second block U'(theta, phi) = C1 C2 (Ry(theta-phi) x I) C2 (Ry(theta+phi) x I).
/// Produces the same X-state as build_xstate_circuit(p, theta, pi/2 - phi).
Circuit build_xstate_circuit_alt(const Probabilities4 &p, double theta, double phi);

/// Equi-entangled special case of the alternative block (theta == phi): C1 (Ry(2 theta) x I).
Circuit build_equi_entangled_circuit(const Probabilities4 &p, double theta);

/// Product initial state ((1+l)/2, (1-l)/2) x (cos^2 g/2, sin^2 g/2) copied onto qubits 2,3
/// (no leading CNOT), followed by the X-state block with (theta, phi).
Circuit build_sector_mixture_circuit(double lambda, double gamma, double theta, double phi);

/// Two-qubit sector circuit: U(lambda) on qubit 0, CNOT(0 -> 1), RX(theta) on qubit 1.
Circuit build_sector_circuit(double lambda, double theta);

/// Seven-parameter special unitary in X shape.
struct XUnitaryParams {
    double a1 = 0.0;
    double b1 = 0.0;
    double a2 = 0.0;
    double b2 = 0.0;
    double x = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
};

UnitaryMatrix assemble_x_unitary(const XUnitaryParams &p);

/// (s1, s2, s3, s4) of the outer RZ layers.
std::array<double, 4> x_unitary_rz_angles(const XUnitaryParams &p);

/// (Rz(s1) x Rz(s2)) C1 (Ry(t1+t2) x W(x/2)) C2 (Ry(t1-t2) x I) C1 (Rz(s3) x Rz(s4)),
/// emitted in application order. Equals assemble_x_unitary(p) up to a global phase.
Circuit decompose_x_unitary(const XUnitaryParams &p);
/// The same ten gates on (first, second) of an existing circuit.
void append_x_unitary(Circuit &c, const XUnitaryParams &p, int first, int second);

/// max|a - e^{i g} b| with g matched on the largest-modulus entry of b.
double global_phase_distance(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace xsim

#endif
