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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace aoas {

struct NelderMeadOptions {
    /// Offset of the initial simplex vertices along each axis.
    double initial_step = 0.3;
    /// Stop once max - min over the simplex values is at most this.
    double f_tolerance = 1e-8;
    std::size_t max_evaluations = 500;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    std::size_t evaluations;
    bool converged;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free simplex minimization (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). Never exceeds max_evaluations; on budget
/// exhaustion returns the best vertex seen.
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0, const NelderMeadOptions &options);

}  // namespace aoas
