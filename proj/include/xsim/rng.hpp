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

#ifndef XSIM_RNG_HPP
#define XSIM_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace xsim {

/// mt19937_64 and seed_seq are both fully specified by the standard, so every stream
/// below is reproducible across compilers. Distribution objects are avoided for the
/// same reason.
using Rng = std::mt19937_64;

/// Substream seed for (seed, stream). Nest calls to key on several indices.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng &rng);

/// Index k drawn with probability weights[k] / sum(weights). Weights must be >= 0.
std::size_t sample_categorical(std::span<const double> weights, Rng &rng);

/// Inverse CDF of one weight vector, built once for repeated draws. A draw consumes one
/// uniform01 and returns what sample_categorical would on the same stream.
class CategoricalTable {
  public:
    explicit CategoricalTable(std::span<const double> weights);
    std::size_t operator()(Rng &rng) const;

  private:
    std::vector<double> cdf_;
    std::size_t last_ = 0;  // last index with positive weight
};

}  // namespace xsim

#endif
