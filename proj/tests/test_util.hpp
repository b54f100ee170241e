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

#ifndef XSIM_TEST_UTIL_HPP
#define XSIM_TEST_UTIL_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "xsim/matrix.hpp"

namespace xsim::testing {

inline Complex gaussian_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng), n(rng)};
}

inline ComplexMatrix random_matrix(std::size_t dim, std::mt19937_64 &rng) {
    ComplexMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = gaussian_complex(rng);
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
    auto g = random_matrix(dim, rng);
    return (g + g.adjoint()) * Complex(0.5);
}

/// Ginibre-distributed full-rank mixed state.
inline DensityMatrix random_density(std::size_t dim, std::mt19937_64 &rng) {
    auto g = random_matrix(dim, rng);
    auto m = g * g.adjoint();
    m *= 1.0 / m.trace().real();
    return DensityMatrix::from_matrix(m);
}

inline std::vector<Complex> random_pure(std::size_t dim, std::mt19937_64 &rng) {
    std::vector<Complex> v(dim);
    double norm = 0.0;
    for (auto &x : v) {
        x = gaussian_complex(rng);
        norm += std::norm(x);
    }
    for (auto &x : v) {
        x /= std::sqrt(norm);
    }
    return v;
}

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Point drawn uniformly from the probability 3-simplex.
inline std::array<double, 4> random_simplex(std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    std::array<double, 4> p{};
    double s = 0.0;
    for (auto &x : p) {
        x = e(rng);
        s += x;
    }
    for (auto &x : p) {
        x /= s;
    }
    return p;
}

}  // namespace xsim::testing

#endif
