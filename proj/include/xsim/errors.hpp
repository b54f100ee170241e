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

#ifndef XSIM_ERRORS_HPP
#define XSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xsim {

/// Base of every error raised for a violated physics or numerical contract.
/// The CLI maps this family to exit code 3.
class ContractViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions are incompatible or outside the supported set.
class DimensionError : public ContractViolation {
  public:
    using ContractViolation::ContractViolation;
};

/// A matrix expected to be X-shaped carries mass off the X.
class ShapeError : public ContractViolation {
  public:
    ShapeError(const std::string &what, double leakage) : ContractViolation(what), leakage_(leakage) {}
    double leakage() const noexcept { return leakage_; }

  private:
    double leakage_;
};

/// Inverting X-state entries to spectral parameters produced probabilities outside [0, 1].
class InfeasibleError : public ContractViolation {
  public:
    using ContractViolation::ContractViolation;
};

/// A tomography protocol was fed an incomplete or mismatched set of settings.
class ProtocolError : public ContractViolation {
  public:
    using ContractViolation::ContractViolation;
};

/// Malformed or unknown configuration. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace xsim

#endif
