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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aoas/mixers.hpp"
#include "aoas/statevector.hpp"

namespace aoas {

/// Angles (gamma_1..gamma_p, beta_1..beta_p). Both lists have length p.
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    std::size_t depth() const { return gammas.size(); }
    /// Throws std::invalid_argument on unequal lengths or non-finite angles.
    void validate() const;
};

/// beta_i = -gamma_{p+1-i}: the symmetric submanifold of the ring problem.
QaoaParams symmetric_lift(std::span<const double> gammas);

/// Maps an angle to (-pi, pi].
double wrap_angle(double angle);

/// U_M(beta_p) U_P(gamma_p) ... U_M(beta_1) U_P(gamma_1) |init>.
StateVector run_qaoa(const DiagonalCost &cost, const MixerSpec &mixer, const StateVector &init,
                     const QaoaParams &params);

/// (max f - <f>) / (max f - min f). For -cut tables (max f = 0) this is
/// <cut> / max cut. Throws UndefinedRatio for constant tables.
double approximation_ratio(const StateVector &state, const DiagonalCost &cost);
double approximation_ratio(double expectation, const DiagonalCost &cost);

struct OptimizerConfig {
    std::size_t restarts = 32;
    std::uint64_t seed = 0;
    /// Search (gamma_1..gamma_p) only and derive betas by symmetric_lift.
    bool symmetric = false;
    double simplex_size = 0.3;
    double tolerance = 1e-8;
    std::size_t evaluations_per_start = 500;
    unsigned threads = 1;
};

struct QaoaResult {
    double expectation;
    /// Absent when the cost table is constant.
    std::optional<double> ratio;
    /// Wrapped to (-pi, pi].
    QaoaParams best_params;
    std::size_t evaluations;
};

/// Multi-start Nelder-Mead over the QAOA angles. Restart r starts from a
/// point drawn uniformly from [-pi, pi]^d with Rng::stream(seed, r). The
/// lowest expectation wins; ties go to the lowest restart index. Results do
/// not depend on config.threads.
QaoaResult optimize_params(const DiagonalCost &cost, const MixerSpec &mixer, const StateVector &init,
                           std::size_t depth, const OptimizerConfig &config);

/// Evaluates the degenerate depth-0 circuit: <init|f|init>.
QaoaResult evaluate_depth_zero(const DiagonalCost &cost, const StateVector &init);

}  // namespace aoas
