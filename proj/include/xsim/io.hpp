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

#ifndef XSIM_IO_HPP
#define XSIM_IO_HPP

#include <string>

#include "json.hpp"
#include "xsim/circuit.hpp"
#include "xsim/heisenberg.hpp"
#include "xsim/noise.hpp"
#include "xsim/tomography.hpp"
#include "xsim/xstate.hpp"

namespace xsim {

using Json = nlohmann::json;

/// 12 significant digits, the number format of every CSV cell.
std::string format_double(double v);

/// Throws ConfigError if `j` is not an object or carries a key outside `allowed`.
void reject_unknown_keys(const Json &j, std::initializer_list<std::string_view> allowed, std::string_view where);

Json to_json(const XState &x);
/// Expects {a, b, c, d, w_re, w_im, z_re, z_im}; missing coherences default to 0.
XState xstate_from_json(const Json &j);

Json to_json(const XSpectral &s);
/// Expects {p: [4], theta, phi}.
XSpectral xspectral_from_json(const Json &j);

Json to_json(const HeisenbergParams &p);
HeisenbergParams heisenberg_from_json(const Json &j);

Json to_json(const NoiseModel &nm);
/// Missing fields keep their defaults; unknown fields are a ConfigError.
NoiseModel noise_from_json(const Json &j);

/// {width, gates: [{kind, params: [...], target, control?}]}. GENERIC_1Q params hold the
/// 2x2 payload as (re, im) pairs in row-major order.
Json to_json(const Circuit &c);
Circuit circuit_from_json(const Json &j);

Json to_json(const ComplexMatrix &m);
Json to_json(const TomographyReport &r);

}  // namespace xsim

#endif
