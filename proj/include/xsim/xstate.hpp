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

#ifndef XSIM_XSTATE_HPP
#define XSIM_XSTATE_HPP

#include <array>

#include "xsim/matrix.hpp"

namespace xsim {

/// Two-qubit state with support on the diagonal and anti-diagonal only:
///
///   [[a, 0, 0, w],
///    [0, b, z, 0],
///    [0, z*, c, 0],
///    [w*, 0, 0, d]]
struct XState {
    double a = 0.25;
    double b = 0.25;
    double c = 0.25;
    double d = 0.25;
    Complex w = 0.0;
    Complex z = 0.0;
};

/// Throws ContractViolation unless populations are a distribution (1e-12) and
/// both 2x2 blocks are PSD (|w| <= sqrt(ad) + 1e-10, |z| <= sqrt(bc) + 1e-10).
void validate(const XState &x);

/// Mixture weights over the eigenbasis |psi_ij> of a real X-state plus the two
/// mixing angles. p is ordered (p00, p01, p10, p11).
struct XSpectral {
    std::array<double, 4> p{0.25, 0.25, 0.25, 0.25};
    double theta = 0.0;
    double phi = 0.0;
};

/// Throws ContractViolation unless p is a distribution and theta, phi lie in [0, pi/2].
void validate(const XSpectral &s);

/// a = p00 cos^2 t + p10 sin^2 t,  d = p00 sin^2 t + p10 cos^2 t,  w = (p00 - p10) cos t sin t,
/// b = p01 sin^2 f + p11 cos^2 f,  c = p01 cos^2 f + p11 sin^2 f,  z = (p01 - p11) cos f sin f.
/// Angles are unrestricted here; from_spectral additionally validates them.
XState x_state_from_angles(const std::array<double, 4> &p, double theta, double phi);
XState from_spectral(const XSpectral &s);

/// Inverse of from_spectral for real w, z. theta = atan2(2w, a - d) / 2 folded into
/// [0, pi/2); |a - d| < 1e-12 with w != 0 gives theta = pi/4, p00 = a + w, p10 = a - w.
/// The odd block inverts the same way with (a, d, w) replaced by (c, b, z).
/// Throws InfeasibleError when a recovered weight leaves [0, 1] by more than 1e-10.
XSpectral to_spectral(const XState &x);

/// Local diagonal phases diag(1, e^{i alpha}) x diag(1, e^{i beta}) that made w, z real.
/// RZ(-alpha) on the first qubit and RZ(-beta) on the second restore them.
struct PhaseRecord {
    double alpha = 0.0;
    double beta = 0.0;
};

struct StrippedState {
    XState state;
    PhaseRecord phases;
};

/// Throws ShapeError (carrying the leakage) if rho has more than 1e-9 off-X mass.
StrippedState strip_phases(const DensityMatrix &rho);

/// 2 max{0, |w| - sqrt(bc), |z| - sqrt(ad)}.
double concurrence_x(const XState &x);

/// max{0, l1 - l2 - l3 - l4} with l_k^2 the eigenvalues of sqrt(rho) rho~ sqrt(rho),
/// rho~ = (Y x Y) rho* (Y x Y). Valid for any two-qubit state.
double concurrence_wootters_oracle(const DensityMatrix &rho);

/// |lambda| for the sector state diag((1+lambda)/2, (1-lambda)/2).
double bell_coherence(double lambda);
/// l1 coherence of a 2x2 sector block in its Bell-pair basis: 2|off-diagonal|.
double bell_l1_coherence(const ComplexMatrix &block);

/// Sum of absolute values of the 8 entries outside the X.
double leakage(const ComplexMatrix &m);
double leakage(const DensityMatrix &rho);

DensityMatrix to_density(const XState &x);
/// Throws ShapeError if rho has more than 1e-9 off-X mass.
XState from_density(const DensityMatrix &rho);

}  // namespace xsim

#endif
