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
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "aoas/statevector.hpp"

namespace aoas {

/// Success probabilities of the periodic Grover circuit: trace[k] is
/// |<target|W^(k+1)|s>|^2.
struct GroverRun {
    unsigned n;
    Bitstring target;
    double gamma;
    std::vector<double> trace;
};

/// One period W(gamma) = e^{-i pi H_M/n} e^{i gamma H_P} e^{-i pi H_M/n} e^{-i gamma H_P}
/// with H_M = sum_j X_j and H_P = |target><target|; the rightmost factor acts
/// first.
void grover_step(StateVector &state, Bitstring target, double gamma);

/// Starts from the uniform state and records the success probability after
/// each of max_steps applications of W.
GroverRun run_grover(unsigned n, Bitstring target, double gamma, std::size_t max_steps);

/// Smallest k with trace[k-1] >= threshold.
std::optional<std::size_t> first_hit(const GroverRun &run, double threshold);

struct GroverScalingOptions {
    /// gamma_k = pi * k / gamma_scan, k = 1..gamma_scan.
    std::size_t gamma_scan = 64;
    double threshold = 0.5;
    Bitstring target = 0;
    /// Step budget per run is ceil(budget_factor * sqrt(2^n)) + budget_offset.
    double budget_factor = 4.0;
    std::size_t budget_offset = 16;
    unsigned threads = 1;
};

struct GroverPoint {
    unsigned n;
    std::size_t steps;
    double gamma;
};

struct GroverScalingFit {
    double slope;
    double intercept;
    std::vector<GroverPoint> per_n;
};

/// Least-squares line through (x_i, log2 y_i); returns (slope, intercept).
std::pair<double, double> fit_log2_line(std::span<const double> xs, std::span<const double> ys);

/// T(n) = min over the gamma grid of first_hit, then a fit of log2 T against
/// n. Needs >= 4 distinct n. Throws NoHitError naming every n that never
/// reached the threshold.
GroverScalingFit scaling_fit(std::span<const unsigned> ns, const GroverScalingOptions &options);
/// The same fit from runs already produced by grover_sweep(ns, options).
GroverScalingFit scaling_fit(std::span<const unsigned> ns, std::span<const GroverRun> runs,
                             const GroverScalingOptions &options);

/// The runs scaling_fit performs, every gamma for every n (n-major, gamma
/// ascending). Used for the CSV export.
std::vector<GroverRun> grover_sweep(std::span<const unsigned> ns, const GroverScalingOptions &options);

/// Header "n,gamma,step,success_probability"; one row per recorded step,
/// steps counted from 1.
void write_grover_csv(std::ostream &out, std::span<const GroverRun> runs);

/// pi/(2 sqrt 2) * sqrt(2^n): the reference query count.
double reference_query_count(unsigned n);

}  // namespace aoas
