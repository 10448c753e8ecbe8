// Copyright 2026 The AOAS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace aoas {

/// Raised when a register or variable count exceeds what the dense
/// representations support.
class SizeError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Raised when two objects that must describe the same number of qubits
/// disagree.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The instance has no feasible solution (e.g. a disconnected graph).
class InfeasibleInstance : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A file or document that does not follow the expected format.
class FormatError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Approximation ratio requested for a constant cost table.
class UndefinedRatio : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A Grover scaling run in which some register sizes never reached the
/// success threshold.
class NoHitError : public std::runtime_error {
  public:
    NoHitError(const std::string &what, std::vector<unsigned> missing)
        : std::runtime_error(what), missing_(std::move(missing)) {}
    const std::vector<unsigned> &missing() const { return missing_; }

  private:
    std::vector<unsigned> missing_;
};

}  // namespace aoas
