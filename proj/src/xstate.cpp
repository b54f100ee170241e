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

#include "xsim/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "xsim/errors.hpp"

namespace xsim {

namespace {

constexpr double kDegenerate = 1e-12;
constexpr double kFeasibility = 1e-10;
constexpr double kShapeTol = 1e-9;

struct BlockSpectrum {
    double angle;
    double first;   // weight on cos^2 of the upper diagonal entry
    double second;  // weight on sin^2 of the upper diagonal entry
};

// Solves upper = P cos^2 t + Q sin^2 t, lower = P sin^2 t + Q cos^2 t, off = (P - Q) cos t sin t.
BlockSpectrum invert_block(double upper, double lower, double off) {
    const double diff = upper - lower;
    const double sum = upper + lower;
    if (std::abs(diff) < kDegenerate) {
        if (std::abs(off) < kDegenerate) {
            return {0.0, upper, lower};
        }
        return {std::numbers::pi / 4, upper + off, upper - off};
    }
    double angle = 0.5 * std::atan2(2.0 * off, diff);
    if (angle < 0.0) {
        angle += std::numbers::pi / 2;
    }
    if (angle >= std::numbers::pi / 2) {
        angle -= std::numbers::pi / 2;
    }
    const double c2 = std::cos(2.0 * angle);
    const double s2 = std::sin(2.0 * angle);
    const double gap = std::abs(c2) >= std::abs(s2) ? diff / c2 : 2.0 * off / s2;
    return {angle, 0.5 * (sum + gap), 0.5 * (sum - gap)};
}

double checked_weight(double p) {
    if (p < -kFeasibility || p > 1.0 + kFeasibility) {
        throw InfeasibleError("recovered mixture weight " + std::to_string(p) + " lies outside [0, 1]");
    }
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace

void validate(const XState &x) {
    const double pops[] = {x.a, x.b, x.c, x.d};
    double sum = 0.0;
    for (double v : pops) {
        if (!(v >= -1e-12)) {
            throw ContractViolation("X-state population below zero");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ContractViolation("X-state populations must sum to 1 within 1e-12");
    }
    if (std::abs(x.w) > std::sqrt(std::max(0.0, x.a * x.d)) + 1e-10) {
        throw ContractViolation("X-state outer block is not PSD: |w| > sqrt(ad)");
    }
    if (std::abs(x.z) > std::sqrt(std::max(0.0, x.b * x.c)) + 1e-10) {
        throw ContractViolation("X-state inner block is not PSD: |z| > sqrt(bc)");
    }
}

void validate(const XSpectral &s) {
    double sum = 0.0;
    for (double v : s.p) {
        if (!(v >= -1e-12)) {
            throw ContractViolation("spectral weight below zero");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ContractViolation("spectral weights must sum to 1 within 1e-12");
    }
    const double top = std::numbers::pi / 2;
    if (!(s.theta >= 0.0 && s.theta <= top && s.phi >= 0.0 && s.phi <= top)) {
        throw ContractViolation("spectral angles must lie in [0, pi/2]");
    }
}

XState x_state_from_angles(const std::array<double, 4> &p, double theta, double phi) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cf = std::cos(phi), sf = std::sin(phi);
    XState x;
    x.a = p[0] * ct * ct + p[2] * st * st;
    x.d = p[0] * st * st + p[2] * ct * ct;
    x.b = p[1] * sf * sf + p[3] * cf * cf;
    x.c = p[1] * cf * cf + p[3] * sf * sf;
    x.w = (p[0] - p[2]) * ct * st;
    x.z = (p[1] - p[3]) * cf * sf;
    return x;
}

XState from_spectral(const XSpectral &s) {
    validate(s);
    return x_state_from_angles(s.p, s.theta, s.phi);
}

XSpectral to_spectral(const XState &x) {
    validate(x);
    if (std::abs(x.w.imag()) > kDegenerate || std::abs(x.z.imag()) > kDegenerate) {
        throw ContractViolation("to_spectral needs real coherences; strip phases first");
    }
    const auto even = invert_block(x.a, x.d, x.w.real());
    const auto odd = invert_block(x.c, x.b, x.z.real());
    XSpectral s;
    s.theta = even.angle;
    s.phi = odd.angle;
    s.p = {checked_weight(even.first), checked_weight(odd.first), checked_weight(even.second),
           checked_weight(odd.second)};
    return s;
}

StrippedState strip_phases(const DensityMatrix &rho) {
    XState x = from_density(rho);
    const double mu = std::abs(x.w) > 0.0 ? std::arg(x.w) : 0.0;
    const double nu = std::abs(x.z) > 0.0 ? std::arg(x.z) : 0.0;
    StrippedState out;
    out.phases = {0.5 * (mu + nu), 0.5 * (mu - nu)};
    x.w = std::abs(x.w);
    x.z = std::abs(x.z);
    out.state = x;
    return out;
}

double concurrence_x(const XState &x) {
    const double outer = std::abs(x.w) - std::sqrt(std::max(0.0, x.b * x.c));
    const double inner = std::abs(x.z) - std::sqrt(std::max(0.0, x.a * x.d));
    return 2.0 * std::max({0.0, outer, inner});
}

double concurrence_wootters_oracle(const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw DimensionError("concurrence needs a two-qubit state");
    }
    const ComplexMatrix yy = kron(pauli(2), pauli(2));
    const ComplexMatrix flipped = yy * rho.matrix().conj() * yy;
    const ComplexMatrix root = psd_sqrt(rho.matrix());
    ComplexMatrix r = root * flipped * root;
    r = (r + r.adjoint()) * Complex(0.5);
    const auto eig = herm_eig(r);
    double l[4];
    for (int k = 0; k < 4; ++k) {
        l[k] = eig.values[k] > kSqrtFloor ? std::sqrt(eig.values[k]) : 0.0;
    }
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double bell_coherence(double lambda) {
    if (lambda < -1.0 || lambda > 1.0) {
        throw ContractViolation("sector parameter must lie in [-1, 1]");
    }
    return std::abs(lambda);
}

double bell_l1_coherence(const ComplexMatrix &block) {
    if (block.rows() != 2 || block.cols() != 2) {
        throw DimensionError("sector block must be 2x2");
    }
    const double h = 1.0 / std::sqrt(2.0);
    const ComplexMatrix bell{{h, h}, {h, -h}};
    const ComplexMatrix rotated = bell * block * bell;
    return 2.0 * std::abs(rotated(0, 1));
}

double leakage(const ComplexMatrix &m) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw DimensionError("leakage needs a 4x4 matrix");
    }
    double total = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            if (c != r && c != 3 - r) {
                total += std::abs(m(r, c));
            }
        }
    }
    return total;
}

double leakage(const DensityMatrix &rho) { return leakage(rho.matrix()); }

DensityMatrix to_density(const XState &x) {
    validate(x);
    ComplexMatrix m = ComplexMatrix::diagonal({x.a, x.b, x.c, x.d});
    m(0, 3) = x.w;
    m(3, 0) = std::conj(x.w);
    m(1, 2) = x.z;
    m(2, 1) = std::conj(x.z);
    return DensityMatrix::from_matrix(std::move(m));
}

XState from_density(const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw DimensionError("X-state needs a two-qubit density matrix");
    }
    const double leak = leakage(rho);
    if (leak > kShapeTol) {
        throw ShapeError("density matrix is not X-shaped (leakage " + std::to_string(leak) + ")", leak);
    }
    XState x;
    x.a = rho(0, 0).real();
    x.b = rho(1, 1).real();
    x.c = rho(2, 2).real();
    x.d = rho(3, 3).real();
    x.w = rho(0, 3);
    x.z = rho(1, 2);
    return x;
}

}  // namespace xsim
