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
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "xsim/errors.hpp"

using namespace xsim;
using xsim::testing::random_density;
using xsim::testing::random_simplex;
using xsim::testing::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix phi_plus() {
    const double h = 1.0 / std::sqrt(2.0);
    return DensityMatrix::pure(std::vector<Complex>{h, 0, 0, h});
}

std::vector<SettingData> exact_data(const DensityMatrix &rho, Protocol p) {
    TomographyOptions opts;
    opts.shots = 0;
    return measure(rho, p, opts);
}

std::vector<SettingData> sampled(const DensityMatrix &rho, Protocol p, std::uint64_t shots, std::uint64_t seed) {
    TomographyOptions opts;
    opts.shots = shots;
    opts.seed = seed;
    return measure(rho, p, opts);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v.size() % 2 ? v[v.size() / 2] : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
}

XState random_complex_x(std::mt19937_64 &rng) {
    auto x = x_state_from_angles(random_simplex(rng), uniform(rng, 0, kPi / 2), uniform(rng, 0, kPi / 2));
    x.w *= std::polar(1.0, uniform(rng, -kPi, kPi));
    x.z *= std::polar(1.0, uniform(rng, -kPi, kPi));
    return x;
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

TEST(settings, protocol_sets) {
    EXPECT_EQ(protocol_settings(Protocol::Full).size(), 9u);
    std::vector<std::string> p5;
    for (const auto &s : protocol_settings(Protocol::Partial5)) {
        p5.push_back(s.label());
    }
    EXPECT_EQ(p5, (std::vector<std::string>{"XX", "YY", "ZZ", "XY", "YX"}));
    EXPECT_EQ(protocol_settings(Protocol::Partial3).size(), 3u);
    EXPECT_EQ(parse_setting("YZ").label(), "YZ");
    EXPECT_THROW(parse_setting("XI"), ConfigError);
}

TEST(sample_setting, deterministic_outcomes) {
    auto rec = sample_setting(DensityMatrix::basis_state(4, 0), parse_setting("ZZ"), 500, 1);
    EXPECT_EQ(rec.counts[0], 500u);

    auto bell = sample_setting(phi_plus(), parse_setting("XX"), 4000, 2);
    EXPECT_EQ(bell.counts[1] + bell.counts[2], 0u);
    EXPECT_EQ(bell.counts[0] + bell.counts[3], 4000u);
    EXPECT_GT(bell.counts[0], 0u);
    EXPECT_GT(bell.counts[3], 0u);
}

TEST(sample_setting, large_shot_limit) {
    auto rec = sample_setting(DensityMatrix::maximally_mixed(4), parse_setting("XX"), 1000000, 3);
    for (auto n : rec.counts) {
        EXPECT_NEAR(static_cast<double>(n) / 1e6, 0.25, 0.01);
    }
}

TEST(sample_setting, reproducible_for_fixed_seed) {
    std::mt19937_64 rng(61);
    auto rho = random_density(4, rng);
    auto a = sample_setting(rho, parse_setting("XY"), 8000, 99);
    auto b = sample_setting(rho, parse_setting("XY"), 8000, 99);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_THROW(sample_setting(rho, parse_setting("XY"), 0, 99), ContractViolation);
}

TEST(expectations_from_counts, reference_values) {
    auto e = expectations_from_counts({parse_setting("ZZ"), 10, {10, 0, 0, 0}});
    EXPECT_EQ(e.joint, 1.0);
    EXPECT_EQ(e.first, 1.0);
    EXPECT_EQ(e.second, 1.0);
    e = expectations_from_counts({parse_setting("XX"), 8, {2, 2, 2, 2}});
    EXPECT_EQ(e.joint, 0.0);
    EXPECT_EQ(e.first, 0.0);
    EXPECT_EQ(e.second, 0.0);
    e = expectations_from_counts({parse_setting("XX"), 8000, {4000, 0, 0, 4000}});
    EXPECT_EQ(e.joint, 1.0);
    EXPECT_EQ(e.first, 0.0);
    EXPECT_EQ(e.second, 0.0);
}

TEST(expectations, match_direct_traces) {
    std::mt19937_64 rng(62);
    auto rho = random_density(4, rng);
    for (const auto &s : protocol_settings(Protocol::Full)) {
        auto e = expectations(exact_setting(rho, s));
        const auto &a = pauli(static_cast<int>(s.first));
        const auto &b = pauli(static_cast<int>(s.second));
        EXPECT_NEAR(e.joint, (rho.matrix() * kron(a, b)).trace().real(), 1e-14);
        EXPECT_NEAR(e.first, (rho.matrix() * kron(a, pauli(0))).trace().real(), 1e-14);
        EXPECT_NEAR(e.second, (rho.matrix() * kron(pauli(0), b)).trace().real(), 1e-14);
    }
}

TEST(reconstruct_full, exact_inversion_is_identity) {
    std::mt19937_64 rng(63);
    for (int k = 0; k < 200; ++k) {
        auto rho = random_density(4, rng);
        auto data = exact_data(rho, Protocol::Full);
        EXPECT_LE(max_abs_diff(linear_inversion_full(data), rho.matrix()), 1e-12);
        EXPECT_LE(max_abs_diff(reconstruct_full(data).matrix(), rho.matrix()), 1e-12);
    }
}

TEST(reconstruct_full, shot_statistics) {
    std::vector<double> fid, dist;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        fid.push_back(fidelity(phi_plus(), reconstruct_full(sampled(phi_plus(), Protocol::Full, 8000, seed))));
        auto mixed = DensityMatrix::maximally_mixed(4);
        dist.push_back(trace_distance(mixed, reconstruct_full(sampled(mixed, Protocol::Full, 8000, seed))));
    }
    EXPECT_GE(median(fid), 0.98);
    EXPECT_LE(median(dist), 0.05);
}

TEST(reconstruct_full, protocol_errors) {
    auto data = exact_data(phi_plus(), Protocol::Full);
    data.pop_back();
    EXPECT_THROW(linear_inversion_full(data), ProtocolError);
    data.push_back(data.front());
    EXPECT_THROW(linear_inversion_full(data), ProtocolError);
    EXPECT_THROW(reconstruct_x5(exact_data(phi_plus(), Protocol::Partial3)), ProtocolError);
    EXPECT_THROW(reconstruct_x3(exact_data(phi_plus(), Protocol::Partial5)), ProtocolError);
}

TEST(reconstruct_x5, exact_recovery_on_complex_x_states) {
    std::mt19937_64 rng(64);
    for (int k = 0; k < 200; ++k) {
        auto x = random_complex_x(rng);
        expect_x_near(reconstruct_x5(exact_data(to_density(x), Protocol::Partial5)), x, 1e-12);
    }
}

TEST(reconstruct_x5, reference_states) {
    expect_x_near(reconstruct_x5(exact_data(phi_plus(), Protocol::Partial5)), {0.5, 0, 0, 0.5, 0.5, 0}, 1e-15);
    expect_x_near(reconstruct_x5(exact_data(DensityMatrix::maximally_mixed(4), Protocol::Partial5)), {}, 1e-15);
}

TEST(reconstruct_x3, exact_recovery_on_real_x_states) {
    std::mt19937_64 rng(65);
    for (int k = 0; k < 200; ++k) {
        auto x = x_state_from_angles(random_simplex(rng), uniform(rng, 0, kPi / 2), uniform(rng, 0, kPi / 2));
        expect_x_near(reconstruct_x3(exact_data(to_density(x), Protocol::Partial3)), x, 1e-12);
    }
}

TEST(reconstruct_x3, drops_imaginary_coherence) {
    const XState x{0.5, 0, 0, 0.5, Complex(0, 0.5), 0};
    auto r = reconstruct_x3(exact_data(to_density(x), Protocol::Partial3));
    EXPECT_NEAR(std::abs(r.w), 0.0, 1e-15);
}

TEST(reconstruct_x3, bell_concurrence_from_shots) {
    std::vector<double> c;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        c.push_back(concurrence_x(reconstruct_x3(sampled(phi_plus(), Protocol::Partial3, 8000, seed))));
    }
    EXPECT_NEAR(median(c), 1.0, 0.05);
}

TEST(reconstruct_x5, clamps_to_valid_state_under_noise) {
    // Few shots on a pure state push the raw coherence past sqrt(ad).
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        EXPECT_NO_THROW(validate(reconstruct_x5(sampled(phi_plus(), Protocol::Partial5, 20, seed))));
    }
}

TEST(psd_project, reference_cases) {
    std::mt19937_64 rng(66);
    auto rho = random_density(4, rng);
    EXPECT_LE(max_abs_diff(psd_project(rho.matrix()).matrix(), rho.matrix()), 1e-12);
    EXPECT_LE(max_abs_diff(psd_project(ComplexMatrix::diagonal({1.1, -0.1, 0, 0})).matrix(),
                           ComplexMatrix::diagonal({1, 0, 0, 0})),
              1e-12);
    EXPECT_LE(max_abs_diff(psd_project(ComplexMatrix::diagonal({0.7, 0.5, -0.1, -0.1})).matrix(),
                           ComplexMatrix::diagonal({0.6, 0.4, 0, 0})),
              1e-12);
}

TEST(psd_project, idempotent_and_trace_preserving) {
    std::mt19937_64 rng(67);
    for (int k = 0; k < 50; ++k) {
        auto h = xsim::testing::random_hermitian(4, rng);
        h += ComplexMatrix::identity(4) * Complex((1.0 - h.trace().real()) / 4.0);
        auto once = psd_project(h);
        auto twice = psd_project(once.matrix());
        EXPECT_LE(max_abs_diff(once.matrix(), twice.matrix()), 1e-12);
        EXPECT_NEAR(once.matrix().trace().real(), 1.0, 1e-12);
        EXPECT_GE(min_eigenvalue(once.matrix()), -1e-12);
    }
    EXPECT_THROW(psd_project(ComplexMatrix::diagonal({0.5, 0.2})), ContractViolation);
}

TEST(robustness_report, exact_mode_is_perfect_for_real_x_targets) {
    std::mt19937_64 rng(68);
    TomographyOptions opts;
    opts.shots = 0;
    for (int k = 0; k < 50; ++k) {
        auto target =
            to_density(x_state_from_angles(random_simplex(rng), uniform(rng, 0, kPi / 2), uniform(rng, 0, kPi / 2)));
        auto r = robustness_report(target, target, opts);
        ASSERT_EQ(r.reports.size(), 3u);
        for (const auto &rep : r.reports) {
            EXPECT_NEAR(rep.fidelity, 1.0, 1e-9) << protocol_name(rep.protocol);
        }
        EXPECT_EQ(r.input_leakage, 0.0);
    }
}

TEST(robustness_report, shot_noise_gap_between_partial_protocols) {
    std::vector<double> gap;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto target = to_density(x_state_from_angles({0.7, 0.1, 0.15, 0.05}, 0.4, 0.9));
        TomographyOptions opts;
        opts.seed = seed;
        auto r = robustness_report(target, target, opts);
        gap.push_back(std::abs(*r.fidelity(Protocol::Partial5) - *r.fidelity(Protocol::Partial3)));
        for (const auto &rep : r.reports) {
            EXPECT_GE(rep.fidelity, 0.97);
            EXPECT_LE(rep.fidelity, 1.0 + 1e-9);
        }
    }
    EXPECT_LT(median(gap), 0.01);
}

TEST(tomography, error_shrinks_with_shots) {
    std::mt19937_64 rng(69);
    auto rho = random_density(4, rng);
    std::vector<double> low, high;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        low.push_back(trace_distance(rho, reconstruct_full(sampled(rho, Protocol::Full, 1000, seed))));
        high.push_back(trace_distance(rho, reconstruct_full(sampled(rho, Protocol::Full, 64000, seed))));
    }
    EXPECT_LT(median(high), median(low));
}

TEST(tomography, bit_reproducible) {
    std::mt19937_64 rng(70);
    auto rho = random_density(4, rng);
    TomographyOptions opts;
    opts.seed = 1234;
    opts.p_readout = 0.02;
    auto a = robustness_report(rho, rho, opts);
    auto b = robustness_report(rho, rho, opts);
    for (std::size_t k = 0; k < a.reports.size(); ++k) {
        EXPECT_EQ(a.reports[k].fidelity, b.reports[k].fidelity);
        EXPECT_EQ(max_abs_diff(a.reports[k].reconstructed.matrix(), b.reports[k].reconstructed.matrix()), 0.0);
    }
}
