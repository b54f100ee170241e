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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "xsim/circuit.hpp"
#include "xsim/errors.hpp"

using namespace xsim;
using xsim::testing::random_simplex;
using xsim::testing::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

// Raw parameters, rejection-sampled until both blocks are PSD.
XState random_complex_x(std::mt19937_64 &rng) {
    while (true) {
        auto p = random_simplex(rng);
        XState x{p[0], p[1], p[2], p[3], 0.0, 0.0};
        x.w = std::polar(uniform(rng, 0, 0.5), uniform(rng, -kPi, kPi));
        x.z = std::polar(uniform(rng, 0, 0.5), uniform(rng, -kPi, kPi));
        if (std::abs(x.w) <= std::sqrt(x.a * x.d) && std::abs(x.z) <= std::sqrt(x.b * x.c)) {
            return x;
        }
    }
}

void expect_x_near(const XState &got, const XState &want, double tol) {
    EXPECT_NEAR(got.a, want.a, tol);
    EXPECT_NEAR(got.b, want.b, tol);
    EXPECT_NEAR(got.c, want.c, tol);
    EXPECT_NEAR(got.d, want.d, tol);
    EXPECT_NEAR(std::abs(got.w - want.w), 0.0, tol);
    EXPECT_NEAR(std::abs(got.z - want.z), 0.0, tol);
}

}  // namespace

TEST(from_spectral, reference_points) {
    expect_x_near(from_spectral({{1, 0, 0, 0}, kPi / 4, 0.0}), {0.5, 0, 0, 0.5, 0.5, 0}, 1e-15);
    expect_x_near(from_spectral({{0.25, 0.25, 0.25, 0.25}, 0.3, 1.2}), {0.25, 0.25, 0.25, 0.25, 0, 0}, 1e-15);
    const double r = 0.05 * std::sqrt(3.0);
    expect_x_near(from_spectral({{0.4, 0.3, 0.2, 0.1}, kPi / 6, kPi / 6}), {0.35, 0.15, 0.25, 0.25, r, r}, 1e-15);
}

TEST(from_spectral, always_valid) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 500; ++k) {
        XSpectral s{random_simplex(rng), uniform(rng, 0, kPi / 2), uniform(rng, 0, kPi / 2)};
        EXPECT_NO_THROW(validate(from_spectral(s)));
    }
    EXPECT_THROW(from_spectral({{0.5, 0.5, 0, 0}, -0.1, 0}), ContractViolation);
}

TEST(to_spectral, degenerate_and_trivial) {
    auto bell = to_spectral({0.5, 0, 0, 0.5, 0.5, 0});
    EXPECT_NEAR(bell.theta, kPi / 4, 1e-15);
    EXPECT_NEAR(bell.p[0], 1.0, 1e-15);
    EXPECT_NEAR(bell.p[2], 0.0, 1e-15);

    auto mixed = to_spectral({0.25, 0.25, 0.25, 0.25, 0, 0});
    EXPECT_EQ(mixed.theta, 0.0);
    EXPECT_EQ(mixed.phi, 0.0);
    for (double p : mixed.p) {
        EXPECT_NEAR(p, 0.25, 1e-15);
    }
}

TEST(to_spectral, round_trip_interior) {
    std::mt19937_64 rng(32);
    for (int k = 0; k < 1000; ++k) {
        XSpectral s{random_simplex(rng), uniform(rng, 0, kPi / 4), uniform(rng, 0, kPi / 4)};
        auto back = to_spectral(from_spectral(s));
        EXPECT_NEAR(back.theta, s.theta, 1e-9);
        EXPECT_NEAR(back.phi, s.phi, 1e-9);
        for (int i = 0; i < 4; ++i) {
            EXPECT_NEAR(back.p[i], s.p[i], 1e-9);
        }
    }
}

TEST(to_spectral, round_trip_full_angle_range) {
    std::mt19937_64 rng(33);
    for (int k = 0; k < 500; ++k) {
        auto x = from_spectral({random_simplex(rng), uniform(rng, 0, kPi / 2), uniform(rng, 0, kPi / 2)});
        expect_x_near(from_spectral(to_spectral(x)), x, 1e-9);
    }
}

TEST(to_spectral, forced_degenerate_branch) {
    std::mt19937_64 rng(34);
    for (int k = 0; k < 100; ++k) {
        XSpectral s{random_simplex(rng), kPi / 4, kPi / 4};
        auto x = from_spectral(s);
        x.d = x.a;
        x.b = x.c;
        auto back = to_spectral(x);
        EXPECT_EQ(back.theta, kPi / 4);
        EXPECT_NEAR(back.p[0], x.a + x.w.real(), 1e-15);
        EXPECT_NEAR(back.p[2], x.a - x.w.real(), 1e-15);
        for (int i = 0; i < 4; ++i) {
            EXPECT_NEAR(back.p[i], s.p[i], 1e-9);
        }
    }
}

TEST(to_spectral, errors) {
    EXPECT_THROW(to_spectral({0.5, 0, 0, 0.5, Complex(0, 0.5), 0}), ContractViolation);
    EXPECT_THROW(to_spectral({0.5, 0, 0, 0.5, 0.7, 0}), ContractViolation);
}

TEST(to_spectral, matches_prepared_circuit_output) {
    const XState target{0.35, 0.15, 0.25, 0.25, 0.05, 0.1};
    auto s = to_spectral(target);
    const int keep[] = {2, 3};
    auto out = partial_trace(run_density(build_xstate_circuit(s.p, s.theta, s.phi), DensityMatrix::basis_state(16, 0)),
                             keep);
    expect_x_near(from_density(out), target, 1e-12);
}

TEST(strip_phases, real_input_is_unchanged) {
    const XState x{0.35, 0.15, 0.25, 0.25, 0.05, 0.1};
    auto s = strip_phases(to_density(x));
    EXPECT_EQ(s.phases.alpha, 0.0);
    EXPECT_EQ(s.phases.beta, 0.0);
    expect_x_near(s.state, x, 1e-15);
}

TEST(strip_phases, phases_removed_and_invariants_kept) {
    std::mt19937_64 rng(35);
    for (int k = 0; k < 200; ++k) {
        auto x = random_complex_x(rng);
        auto rho = to_density(x);
        auto s = strip_phases(rho);
        EXPECT_NEAR(s.state.w.real(), std::abs(x.w), 1e-15);
        EXPECT_EQ(s.state.w.imag(), 0.0);
        EXPECT_EQ(s.state.z.imag(), 0.0);
        auto stripped = to_density(s.state);
        EXPECT_NEAR(concurrence_wootters_oracle(stripped), concurrence_wootters_oracle(rho), 1e-12);
        auto e0 = herm_eig(rho.matrix()).values, e1 = herm_eig(stripped.matrix()).values;
        for (int i = 0; i < 4; ++i) {
            EXPECT_NEAR(e0[i], e1[i], 1e-12);
        }
        // The recorded phases rebuild the original coherences.
        Circuit c(2);
        c.append(Gate::rz(0, -s.phases.alpha));
        c.append(Gate::rz(1, -s.phases.beta));
        EXPECT_LE(max_abs_diff(run_density(c, stripped).matrix(), rho.matrix()), 1e-12);
    }
}

TEST(strip_phases, rejects_non_x_input) {
    const double h = 0.5;
    auto rho = DensityMatrix::pure(std::vector<Complex>{h, h, h, h});
    try {
        strip_phases(rho);
        FAIL();
    } catch (const ShapeError &e) {
        EXPECT_NEAR(e.leakage(), 2.0, 1e-12);
    }
}

TEST(concurrence_x, reference_values) {
    EXPECT_NEAR(concurrence_x({0.5, 0, 0, 0.5, 0.5, 0}), 1.0, 1e-15);
    EXPECT_EQ(concurrence_x({}), 0.0);
    const double r = 0.05 * std::sqrt(3.0);
    EXPECT_EQ(concurrence_x({0.35, 0.15, 0.25, 0.25, r, r}), 0.0);
    EXPECT_NEAR(concurrence_wootters_oracle(to_density({0.35, 0.15, 0.25, 0.25, r, r})), 0.0, 1e-12);
}

TEST(concurrence_wootters_oracle, pure_states) {
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(concurrence_wootters_oracle(DensityMatrix::pure(std::vector<Complex>{h, 0, 0, h})), 1.0, 1e-12);
    std::mt19937_64 rng(36);
    for (int k = 0; k < 20; ++k) {
        auto u = xsim::testing::random_pure(2, rng), v = xsim::testing::random_pure(2, rng);
        std::vector<Complex> prod{u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]};
        EXPECT_NEAR(concurrence_wootters_oracle(DensityMatrix::pure(prod)), 0.0, 1e-9);
    }
}

TEST(concurrence_wootters_oracle, agrees_with_x_formula) {
    std::mt19937_64 rng(37);
    for (int k = 0; k < 1000; ++k) {
        auto x = k % 2 ? random_complex_x(rng)
                       : from_spectral({random_simplex(rng), uniform(rng, 0, kPi / 2), uniform(rng, 0, kPi / 2)});
        EXPECT_NEAR(concurrence_x(x), concurrence_wootters_oracle(to_density(x)), 1e-9);
    }
}

TEST(bell_coherence, values) {
    EXPECT_EQ(bell_coherence(0.0), 0.0);
    EXPECT_EQ(bell_coherence(1.0), 1.0);
    EXPECT_EQ(bell_coherence(-0.7), 0.7);
    EXPECT_THROW(bell_coherence(1.5), ContractViolation);
    const double lambda = -0.4;
    EXPECT_NEAR(bell_l1_coherence(ComplexMatrix::diagonal({(1 + lambda) / 2, (1 - lambda) / 2})), 0.4, 1e-15);
}

TEST(leakage, values) {
    EXPECT_EQ(leakage(to_density({0.35, 0.15, 0.25, 0.25, 0.05, 0.1})), 0.0);
    const double h = 1.0 / std::sqrt(2.0);
    auto plus_zero = DensityMatrix::pure(std::vector<Complex>{h, 0, h, 0});
    EXPECT_NEAR(leakage(plus_zero), 1.0, 1e-15);
}
