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

#include "xsim/heisenberg.hpp"

#include <cmath>
#include <numbers>

#include "xsim/errors.hpp"

namespace xsim {

namespace {

// sin(w t) / w with the t limit at w == 0.
double sin_over(double w, double t) { return w == 0.0 ? t : std::sin(w * t) / w; }

struct BlockEntries {
    Complex u;
    Complex c;
};

// exp(-i t (field sigma_z + coupling sigma_x)) = [[u, c], [c, u*]] with gap = hypot(field, coupling).
BlockEntries sector_entries(double field, double coupling, double gap, double t) {
    const double s = sin_over(gap, t);
    return {Complex(std::cos(gap * t), -field * s), Complex(0.0, -coupling * s)};
}

ComplexMatrix block_matrix(const BlockEntries &e) { return {{e.u, e.c}, {e.c, std::conj(e.u)}}; }

ComplexMatrix evolve_block(double lambda, const BlockEntries &e) {
    if (lambda < -1.0 || lambda > 1.0) {
        throw ContractViolation("sector parameter must lie in [-1, 1]");
    }
    const double p = 0.5 * (1.0 + lambda);
    const ComplexMatrix u = block_matrix(e);
    ComplexMatrix out = u * ComplexMatrix::diagonal({p, 1.0 - p}) * u.adjoint();
    return (out + out.adjoint()) * Complex(0.5);
}

double sector_concurrence(double lambda, double field, double coupling, double gap, double t) {
    if (gap == 0.0) {
        return 0.0;
    }
    const double s = std::sin(gap * t), c = std::cos(gap * t);
    const double ratio = field / gap;
    return 2.0 * std::abs(lambda) * (std::abs(coupling) / gap) * std::abs(s) * std::sqrt(c * c + ratio * ratio * s * s);
}

// Eigenvectors of field sigma_z + coupling sigma_x: (cos d/2, sin d/2) for +gap, (-sin d/2, cos d/2) for -gap.
std::array<double, 2> half_angle(double field, double coupling) {
    const double d = std::atan2(coupling, field);
    return {std::cos(0.5 * d), std::sin(0.5 * d)};
}

}  // namespace

HeisenbergParams HeisenbergParams::from_coupling(double j, double kappa, double jz, double field,
                                                 double inhomogeneity) {
    return {j * (1.0 + kappa), j * (1.0 - kappa), jz, field, inhomogeneity};
}

double HeisenbergParams::kappa() const {
    if (Jx + Jy == 0.0) {
        throw ContractViolation("kappa is undefined when Jx + Jy == 0");
    }
    return (Jx - Jy) / (Jx + Jy);
}

double HeisenbergParams::xi() const { return std::hypot(B, j_kappa()); }

double HeisenbergParams::eta() const { return std::hypot(b, J()); }

ComplexMatrix hamiltonian(const HeisenbergParams &p) {
    ComplexMatrix h = ComplexMatrix::diagonal({0.5 * p.Jz + p.B, -0.5 * p.Jz + p.b, -0.5 * p.Jz - p.b, 0.5 * p.Jz - p.B});
    h(0, 3) = h(3, 0) = p.j_kappa();
    h(1, 2) = h(2, 1) = p.J();
    return h;
}

Spectrum spectrum(const HeisenbergParams &p) {
    const double xi = p.xi(), eta = p.eta();
    Spectrum s;
    s.energies = {0.5 * p.Jz + xi, 0.5 * p.Jz - xi, -0.5 * p.Jz + eta, -0.5 * p.Jz - eta};
    s.vectors = ComplexMatrix(4, 4);
    const auto even = half_angle(p.B, p.j_kappa());
    s.vectors(0, 0) = even[0];
    s.vectors(3, 0) = even[1];
    s.vectors(0, 1) = -even[1];
    s.vectors(3, 1) = even[0];
    const auto odd = half_angle(p.b, p.J());
    s.vectors(1, 2) = odd[0];
    s.vectors(2, 2) = odd[1];
    s.vectors(1, 3) = -odd[1];
    s.vectors(2, 3) = odd[0];
    return s;
}

UnitaryMatrix propagator(const HeisenbergParams &p, double t) {
    const auto even = sector_entries(p.B, p.j_kappa(), p.xi(), t);
    const auto odd = sector_entries(p.b, p.J(), p.eta(), t);
    const Complex pe = std::exp(-kI * (0.5 * p.Jz * t));
    const Complex po = std::exp(kI * (0.5 * p.Jz * t));
    ComplexMatrix u(4, 4);
    u(0, 0) = pe * even.u;
    u(0, 3) = pe * even.c;
    u(3, 0) = pe * even.c;
    u(3, 3) = pe * std::conj(even.u);
    u(1, 1) = po * odd.u;
    u(1, 2) = po * odd.c;
    u(2, 1) = po * odd.c;
    u(2, 2) = po * std::conj(odd.u);
    return UnitaryMatrix::from_matrix(std::move(u));
}

void validate(const SectorState &s) {
    if (s.block.rows() != 2 || s.block.cols() != 2) {
        throw DimensionError("sector block must be 2x2");
    }
    DensityMatrix::from_matrix(s.block);
}

SectorState evolve_even(double lambda, const HeisenbergParams &p, double t) {
    return {Sector::Even, evolve_block(lambda, sector_entries(p.B, p.j_kappa(), p.xi(), t))};
}

SectorState evolve_odd(double mu, const HeisenbergParams &p, double t) {
    return {Sector::Odd, evolve_block(mu, sector_entries(p.b, p.J(), p.eta(), t))};
}

double concurrence_analytic(Sector sector, double lambda, const HeisenbergParams &p, double t) {
    if (lambda < -1.0 || lambda > 1.0) {
        throw ContractViolation("sector parameter must lie in [-1, 1]");
    }
    if (sector == Sector::Even) {
        return sector_concurrence(lambda, p.B, p.j_kappa(), p.xi(), t);
    }
    return sector_concurrence(lambda, p.b, p.J(), p.eta(), t);
}

DensityMatrix embed_sector(const SectorState &s) {
    validate(s);
    const std::size_t lo = s.sector == Sector::Even ? 0 : 1;
    const std::size_t hi = 3 - lo;
    ComplexMatrix m(4, 4);
    m(lo, lo) = s.block(0, 0);
    m(lo, hi) = s.block(0, 1);
    m(hi, lo) = s.block(1, 0);
    m(hi, hi) = s.block(1, 1);
    return DensityMatrix::from_matrix(std::move(m));
}

XUnitaryParams zero_field_x_params(const HeisenbergParams &p, double t) {
    if (p.B != 0.0 || p.b != 0.0) {
        throw ContractViolation("zero-field parameter map needs B == b == 0");
    }
    constexpr double pi = std::numbers::pi;
    return {0.0, pi, pi, 0.0, p.Jz * t, p.j_kappa() * t, p.J() * t + pi / 2};
}

XUnitaryParams heisenberg_x_params(const HeisenbergParams &p, double t) {
    const auto even = sector_entries(p.B, p.j_kappa(), p.xi(), t);
    const auto odd = sector_entries(p.b, p.J(), p.eta(), t);
    XUnitaryParams x;
    x.x = p.Jz * t;
    x.t1 = std::atan2(std::abs(even.c), std::abs(even.u));
    x.t2 = std::atan2(std::abs(odd.u), std::abs(odd.c));
    x.a1 = 2.0 * std::arg(even.u);
    x.b1 = 2.0 * std::arg(-even.c);
    x.a2 = 2.0 * std::arg(kI * odd.u);
    x.b2 = 2.0 * std::arg(-kI * odd.c);
    return x;
}

}  // namespace xsim
