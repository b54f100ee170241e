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

#ifndef XSIM_HEISENBERG_HPP
#define XSIM_HEISENBERG_HPP

#include <array>

#include "xsim/circuit.hpp"
#include "xsim/matrix.hpp"

namespace xsim {

/// Two-spin XYZ couplings with a z field B + b on the first spin and B - b on the second.
/// Energies and times are in units with hbar = 1.
struct HeisenbergParams {
    double Jx = 0.0;
    double Jy = 0.0;
    double Jz = 0.0;
    double B = 0.0;
    double b = 0.0;

    /// Jx = J (1 + kappa), Jy = J (1 - kappa).
    static HeisenbergParams from_coupling(double j, double kappa, double jz, double field = 0.0,
                                          double inhomogeneity = 0.0);

    double J() const noexcept { return 0.5 * (Jx + Jy); }
    /// J kappa = (Jx - Jy) / 2, defined even when J = 0.
    double j_kappa() const noexcept { return 0.5 * (Jx - Jy); }
    /// Throws ContractViolation when Jx + Jy == 0.
    double kappa() const;
    double xi() const;
    double eta() const;
};

/// diag(Jz/2 + B, -Jz/2 + b, -Jz/2 - b, Jz/2 - B) with J kappa on the (0,3) corners and
/// J on the (1,2) pair.
ComplexMatrix hamiltonian(const HeisenbergParams &p);

/// Energies ordered (Jz/2 + xi, Jz/2 - xi, -Jz/2 + eta, -Jz/2 - eta); vectors(:, k) pairs
/// with energies[k]. With xi == 0 (or eta == 0) the sector eigenvectors are computational.
struct Spectrum {
    std::array<double, 4> energies{};
    ComplexMatrix vectors;
};

Spectrum spectrum(const HeisenbergParams &p);

/// Closed-form exp(-iHt):
///   even block e^{-i Jz t/2} [[u, c], [c, u*]],  u = cos xi t - i (B/xi) sin xi t,  c = -i (J kappa/xi) sin xi t
///   odd block  e^{+i Jz t/2} [[u', c'], [c', u'*]] with (eta, b, J) in place of (xi, B, J kappa).
UnitaryMatrix propagator(const HeisenbergParams &p, double t);

enum class Sector { Even, Odd };

/// Active 2x2 block of a state living in one parity sector. Even: basis (|00>, |11>);
/// odd: basis (|01>, |10>).
struct SectorState {
    Sector sector = Sector::Even;
    ComplexMatrix block = ComplexMatrix::identity(2) * Complex(0.5);
};

/// Throws ContractViolation unless the block is a valid 2x2 density matrix.
void validate(const SectorState &s);

/// Evolves diag((1 + lambda)/2, (1 - lambda)/2) in the even sector for time t.
SectorState evolve_even(double lambda, const HeisenbergParams &p, double t);
/// Same for the odd sector with initial parameter mu.
SectorState evolve_odd(double mu, const HeisenbergParams &p, double t);

/// Even: 2|lambda| (|J kappa|/xi) |sin xi t| sqrt(cos^2 xi t + (B/xi)^2 sin^2 xi t), zero if xi == 0.
/// Odd: the same with (eta, J, b).
double concurrence_analytic(Sector sector, double lambda, const HeisenbergParams &p, double t);

DensityMatrix embed_sector(const SectorState &s);

/// X-unitary parameters of the zero-field propagator: x = Jz t, a1 = b2 = 0, a2 = b1 = pi,
/// t1 = J kappa t, t2 = J t + pi/2. Throws ContractViolation if a field is present.
XUnitaryParams zero_field_x_params(const HeisenbergParams &p, double t);

/// X-unitary parameters of the propagator with field: x = Jz t, t1 = atan2(|c|, |u|),
/// t2 = atan2(|u'|, |c'|), a1 = 2 arg u, b1 = 2 arg(-c), a2 = 2 arg(i u'), b2 = 2 arg(-i c').
XUnitaryParams heisenberg_x_params(const HeisenbergParams &p, double t);

}  // namespace xsim

#endif
