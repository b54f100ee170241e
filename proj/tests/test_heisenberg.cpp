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
#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "xsim/errors.hpp"
#include "xsim/xstate.hpp"

using namespace xsim;
using xsim::testing::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

HeisenbergParams random_params(std::mt19937_64 &rng, bool field) {
    HeisenbergParams p{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2), 0.0, 0.0};
    if (field) {
        p.B = uniform(rng, -2, 2);
        p.b = uniform(rng, -2, 2);
    }
    return p;
}

ComplexMatrix sector_block(const ComplexMatrix &m, Sector s) {
    const std::size_t lo = s == Sector::Even ? 0 : 1, hi = 3 - lo;
    return {{m(lo, lo), m(lo, hi)}, {m(hi, lo), m(hi, hi)}};
}

double chain_concurrence(const SectorState &s) { return concurrence_x(from_density(embed_sector(s))); }

}  // namespace

TEST(hamiltonian, reference_matrices) {
    EXPECT_EQ(max_abs(hamiltonian({})), 0.0);

    auto h = hamiltonian(HeisenbergParams::from_coupling(1.0, 0.0, 1.0));
    ComplexMatrix expected = ComplexMatrix::diagonal({0.5, -0.5, -0.5, 0.5});
    expected(1, 2) = expected(2, 1) = 1.0;
    EXPECT_EQ(max_abs_diff(h, expected), 0.0);

    auto e = herm_eig(hamiltonian(HeisenbergParams::from_coupling(1.0, 0.75, 1.0, 1.0, 0.5))).values;
    const double xi = std::sqrt(1.0 + 0.5625), eta = std::sqrt(0.25 + 1.0);
    std::vector<double> closed{0.5 + xi, 0.5 - xi, -0.5 + eta, -0.5 - eta};
    std::sort(closed.rbegin(), closed.rend());
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(e[k], closed[k], 1e-12);
    }
}

TEST(hamiltonian, commutes_with_parity) {
    std::mt19937_64 rng(41);
    const auto zz = kron(pauli(3), pauli(3));
    for (int k = 0; k < 50; ++k) {
        auto h = hamiltonian(random_params(rng, true));
        EXPECT_EQ(max_abs(h * zz - zz * h), 0.0);
    }
}

TEST(spectrum, zero_field_bell_eigenvectors) {
    auto p = HeisenbergParams::from_coupling(1.0, 0.5, 0.3);
    auto s = spectrum(p);
    EXPECT_NEAR(s.energies[0], 0.15 + 0.5, 1e-15);
    EXPECT_NEAR(s.energies[1], 0.15 - 0.5, 1e-15);
    EXPECT_NEAR(s.energies[2], -0.15 + 1.0, 1e-15);
    EXPECT_NEAR(s.energies[3], -0.15 - 1.0, 1e-15);
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(s.vectors(0, 0).real(), h, 1e-15);
    EXPECT_NEAR(s.vectors(3, 0).real(), h, 1e-15);
    EXPECT_NEAR(s.vectors(0, 1).real(), -h, 1e-15);
    EXPECT_NEAR(s.vectors(3, 1).real(), h, 1e-15);
}

TEST(spectrum, diagonal_field_only) {
    HeisenbergParams p{0, 0, 0.4, 2.0, 0.0};
    auto s = spectrum(p);
    EXPECT_NEAR(s.energies[0], 0.2 + 2.0, 1e-15);
    EXPECT_NEAR(s.energies[1], 0.2 - 2.0, 1e-15);
    EXPECT_EQ(s.vectors(0, 0), Complex(1.0));
    EXPECT_EQ(s.vectors(3, 1), Complex(1.0));
    // eta == 0 falls back to the computational basis as well.
    EXPECT_EQ(s.vectors(1, 2), Complex(1.0));
    EXPECT_EQ(s.vectors(2, 3), Complex(1.0));
}

TEST(spectrum, eigenpairs_on_random_params) {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 200; ++k) {
        auto p = random_params(rng, k % 2);
        auto h = hamiltonian(p);
        auto s = spectrum(p);
        ComplexMatrix d(4, 4);
        for (int i = 0; i < 4; ++i) {
            d(i, i) = s.energies[i];
        }
        EXPECT_LE(max_abs_diff(s.vectors * d * s.vectors.adjoint(), h), 1e-12);
        auto sorted = std::vector<double>(s.energies.begin(), s.energies.end());
        std::sort(sorted.rbegin(), sorted.rend());
        auto eig = herm_eig(h).values;
        for (int i = 0; i < 4; ++i) {
            EXPECT_NEAR(sorted[i], eig[i], 1e-10);
        }
    }
}

TEST(propagator, identity_and_reference_block) {
    std::mt19937_64 rng(43);
    EXPECT_LE(max_abs_diff(propagator(random_params(rng, true), 0.0).matrix(), ComplexMatrix::identity(4)), 0.0);

    auto u = propagator(HeisenbergParams::from_coupling(1.0, 1.0, 0.0), kPi / 4).matrix();
    const double r = std::sqrt(0.5);
    EXPECT_LE(max_abs_diff(sector_block(u, Sector::Even), ComplexMatrix{{r, -kI * r}, {-kI * r, r}}), 1e-15);
}

TEST(propagator, matches_matrix_exponential) {
    std::mt19937_64 rng(44);
    for (int k = 0; k < 200; ++k) {
        auto p = random_params(rng, k % 4 != 0);
        const double t = uniform(rng, -5, 5);
        EXPECT_LE(max_abs_diff(propagator(p, t).matrix(), expm_oracle(hamiltonian(p), t).matrix()), 1e-10);
    }
}

TEST(propagator, sinc_limit) {
    HeisenbergParams p{0.7, 0.7, 0.3, 0.0, 0.0};  // xi == 0
    const double t = 1.9;
    EXPECT_LE(max_abs_diff(propagator(p, t).matrix(), expm_oracle(hamiltonian(p), t).matrix()), 1e-12);
    HeisenbergParams q{0.7, -0.7, 0.3, 0.0, 0.0};  // eta == 0
    EXPECT_LE(max_abs_diff(propagator(q, t).matrix(), expm_oracle(hamiltonian(q), t).matrix()), 1e-12);
}

TEST(propagator, group_property_and_shape) {
    std::mt19937_64 rng(45);
    for (int k = 0; k < 50; ++k) {
        auto p = random_params(rng, true);
        const double t = uniform(rng, -3, 3), s = uniform(rng, -3, 3);
        auto ut = propagator(p, t).matrix();
        EXPECT_LE(max_abs_diff(ut * propagator(p, s).matrix(), propagator(p, t + s).matrix()), 1e-10);
        EXPECT_EQ(leakage(ut), 0.0);
    }
}

TEST(evolve_even, reference_blocks) {
    std::mt19937_64 rng(46);
    auto p = random_params(rng, true);
    EXPECT_LE(max_abs_diff(evolve_even(0.0, p, 1.3).block, ComplexMatrix::identity(2) * Complex(0.5)), 1e-15);

    auto q = HeisenbergParams::from_coupling(1.0, 0.5, 0.2);
    auto s = evolve_even(1.0, q, kPi / 2);  // 2 J kappa t = pi/2
    EXPECT_LE(max_abs_diff(s.block, ComplexMatrix{{0.5, 0.5 * kI}, {-0.5 * kI, 0.5}}), 1e-15);
}

TEST(evolve_even, zero_field_closed_form) {
    std::mt19937_64 rng(47);
    for (int k = 0; k < 100; ++k) {
        const double lambda = uniform(rng, -1, 1), t = uniform(rng, 0, 10);
        auto p = HeisenbergParams::from_coupling(uniform(rng, -2, 2), uniform(rng, -1, 1), uniform(rng, -2, 2));
        const double arg = 2.0 * p.j_kappa() * t;
        ComplexMatrix expected{{0.5 * (1 + lambda * std::cos(arg)), 0.5 * kI * lambda * std::sin(arg)},
                               {-0.5 * kI * lambda * std::sin(arg), 0.5 * (1 - lambda * std::cos(arg))}};
        EXPECT_LE(max_abs_diff(evolve_even(lambda, p, t).block, expected), 1e-12);
    }
}

TEST(evolve_even, field_pure_sector) {
    HeisenbergParams p = HeisenbergParams::from_coupling(1.0, 0.95, 0.3, 1.0, 0.5);
    const double t = 0.8, xi = p.xi();
    const Complex u(std::cos(xi * t), -p.B / xi * std::sin(xi * t));
    const Complex c(0.0, -p.j_kappa() / xi * std::sin(xi * t));
    auto s = evolve_even(1.0, p, t);
    EXPECT_NEAR(s.block(0, 0).real(), std::norm(u), 1e-15);
    EXPECT_NEAR(s.block(1, 1).real(), std::norm(c), 1e-15);
    EXPECT_NEAR(std::abs(s.block(0, 1) - (-u * c)), 0.0, 1e-15);
}

TEST(evolve_odd, reference_and_oracle) {
    std::mt19937_64 rng(48);
    auto p = random_params(rng, true);
    EXPECT_LE(max_abs_diff(evolve_odd(0.0, p, 0.4).block, ComplexMatrix::identity(2) * Complex(0.5)), 1e-15);

    auto q = HeisenbergParams::from_coupling(1.0, 0.3, 0.0);
    EXPECT_LE(max_abs_diff(evolve_odd(1.0, q, kPi / 2).block, ComplexMatrix::diagonal({0.0, 1.0})), 1e-15);

    for (int k = 0; k < 100; ++k) {
        auto r = random_params(rng, true);
        const double mu = uniform(rng, -1, 1), t = uniform(rng, -4, 4);
        ComplexMatrix rho0(4, 4);
        rho0(1, 1) = 0.5 * (1 + mu);
        rho0(2, 2) = 0.5 * (1 - mu);
        auto full = conjugate(rho0, propagator(r, t).matrix());
        EXPECT_LE(max_abs_diff(evolve_odd(mu, r, t).block, sector_block(full, Sector::Odd)), 1e-12);
    }
}

TEST(concurrence_analytic, reference_points) {
    auto p = HeisenbergParams::from_coupling(1.0, 0.75, 0.4);
    EXPECT_NEAR(concurrence_analytic(Sector::Even, 1.0, p, kPi / (4 * 0.75)), 1.0, 1e-12);
    auto iso = HeisenbergParams::from_coupling(1.0, 0.0, 0.4);
    for (double t : {0.1, 0.7, 2.3}) {
        EXPECT_EQ(concurrence_analytic(Sector::Even, 1.0, iso, t), 0.0);
        EXPECT_NEAR(chain_concurrence(evolve_even(1.0, iso, t)), 0.0, 1e-15);
    }
    auto weak = HeisenbergParams::from_coupling(1.0, 0.75, 0.4, 1e-8, 0.0);
    for (double t : {0.1, 0.7, 2.3}) {
        EXPECT_NEAR(concurrence_analytic(Sector::Even, 0.6, weak, t), 0.6 * std::abs(std::sin(2 * 0.75 * t)), 1e-12);
    }
}

TEST(concurrence_analytic, full_chain_agreement) {
    std::mt19937_64 rng(49);
    for (int k = 0; k < 300; ++k) {
        auto p = random_params(rng, k % 2);
        const double lambda = uniform(rng, -1, 1), t = uniform(rng, 0, 10);
        EXPECT_NEAR(chain_concurrence(evolve_even(lambda, p, t)), concurrence_analytic(Sector::Even, lambda, p, t),
                    1e-10);
        EXPECT_NEAR(chain_concurrence(evolve_odd(lambda, p, t)), concurrence_analytic(Sector::Odd, lambda, p, t),
                    1e-10);
    }
}

TEST(concurrence_analytic, factorization_and_period) {
    std::mt19937_64 rng(50);
    for (int k = 0; k < 100; ++k) {
        auto p = HeisenbergParams::from_coupling(uniform(rng, 0.2, 2), uniform(rng, 0.1, 1), uniform(rng, -1, 1));
        const double lambda = uniform(rng, -1, 1), t = uniform(rng, 0, 10);
        EXPECT_NEAR(chain_concurrence(evolve_even(lambda, p, t)),
                    std::abs(lambda) * chain_concurrence(evolve_even(1.0, p, t)), 1e-12);
        const double period = kPi / (2 * std::abs(p.j_kappa()));
        EXPECT_NEAR(concurrence_analytic(Sector::Even, lambda, p, t),
                    concurrence_analytic(Sector::Even, lambda, p, t + period), 1e-10);
    }
}

TEST(embed_sector, reference_states) {
    EXPECT_LE(max_abs_diff(embed_sector({Sector::Even, ComplexMatrix::identity(2) * Complex(0.5)}).matrix(),
                           ComplexMatrix::diagonal({0.5, 0, 0, 0.5})),
              0.0);
    EXPECT_LE(max_abs_diff(embed_sector({Sector::Odd, ComplexMatrix::identity(2) * Complex(0.5)}).matrix(),
                           ComplexMatrix::diagonal({0, 0.5, 0.5, 0})),
              0.0);
    auto x = from_density(embed_sector({Sector::Even, ComplexMatrix{{0.5, 0.5 * kI}, {-0.5 * kI, 0.5}}}));
    EXPECT_EQ(x.w, 0.5 * kI);
    EXPECT_NEAR(concurrence_x(x), 1.0, 1e-15);
    EXPECT_THROW(embed_sector({Sector::Even, ComplexMatrix::diagonal({1.5, -0.5})}), ContractViolation);
}

TEST(x_params, zero_field_map_matches_propagator) {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 100; ++k) {
        auto p = HeisenbergParams::from_coupling(uniform(rng, -2, 2), uniform(rng, -1, 1), uniform(rng, -2, 2));
        const double t = uniform(rng, 0, 10);
        auto target = propagator(p, t).matrix();
        EXPECT_LE(global_phase_distance(circuit_unitary(decompose_x_unitary(zero_field_x_params(p, t))).matrix(), target),
                  1e-9);
    }
    EXPECT_THROW(zero_field_x_params({1, 1, 0, 0.5, 0}, 1.0), ContractViolation);
}

TEST(x_params, field_map_matches_propagator) {
    std::mt19937_64 rng(52);
    for (int k = 0; k < 200; ++k) {
        auto p = random_params(rng, true);
        const double t = uniform(rng, -5, 5);
        auto x = heisenberg_x_params(p, t);
        auto target = propagator(p, t).matrix();
        EXPECT_LE(max_abs_diff(assemble_x_unitary(x).matrix(), target), 1e-12);
        EXPECT_LE(global_phase_distance(circuit_unitary(decompose_x_unitary(x)).matrix(), target), 1e-9);
    }
}
