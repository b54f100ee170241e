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

#include "xsim/rng.hpp"

#include <array>

#include "xsim/errors.hpp"

namespace xsim {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t sample_categorical(std::span<const double> weights, Rng &rng) { return CategoricalTable(weights)(rng); }

CategoricalTable::CategoricalTable(std::span<const double> weights) : cdf_(weights.size()) {
    if (weights.empty()) {
        throw ContractViolation("categorical draw needs at least one weight");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (!(weights[k] >= 0.0)) {
            throw ContractViolation("categorical weights must be nonnegative");
        }
        acc += weights[k];
        cdf_[k] = acc;
        if (weights[k] > 0.0) {
            last_ = k;
        }
    }
}

std::size_t CategoricalTable::operator()(Rng &rng) const {
    const double target = uniform01(rng) * cdf_.back();
    // cdf_ is nondecreasing, so the count of entries <= target is the first index whose
    // cumulative weight exceeds it; that index always carries positive weight.
    std::size_t k = 0;
    for (double c : cdf_) {
        k += c <= target;
    }
    return k > last_ ? last_ : k;
}

}  // namespace xsim
