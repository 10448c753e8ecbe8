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

#include "aoas/qaoa.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "aoas/error.hpp"
#include "aoas/nelder_mead.hpp"
#include "aoas/parallel.hpp"
#include "aoas/random.hpp"

namespace aoas {

void QaoaParams::validate() const {
    if (gammas.size() != betas.size()) {
        throw std::invalid_argument("QAOA parameters need as many betas as gammas (" +
                                    std::to_string(gammas.size()) + " vs " + std::to_string(betas.size()) + ")");
    }
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (!std::isfinite(gammas[i]) || !std::isfinite(betas[i])) {
            throw std::invalid_argument("QAOA angles must be finite");
        }
    }
}

QaoaParams symmetric_lift(std::span<const double> gammas) {
    if (gammas.empty()) {
        throw std::invalid_argument("symmetric_lift needs at least one angle");
    }
    QaoaParams params{{gammas.begin(), gammas.end()}, {}};
    std::size_t p = gammas.size();
    params.betas.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
        params.betas[i] = -gammas[p - 1 - i];
    }
    return params;
}

double wrap_angle(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(angle, two_pi);  // [-pi, pi]
    return r <= -std::numbers::pi ? r + two_pi : r;
}

StateVector run_qaoa(const DiagonalCost &cost, const MixerSpec &mixer, const StateVector &init,
                     const QaoaParams &params) {
    params.validate();
    if (init.qubits() != cost.qubits()) {
        throw DimensionError("initial state and cost table disagree on the qubit count");
    }
    validate_mixer(mixer, init.qubits());
    StateVector state = init;
    for (std::size_t layer = 0; layer < params.depth(); ++layer) {
        apply_diagonal_phase(state, cost, params.gammas[layer]);
        apply_mixer(state, mixer, params.betas[layer]);
    }
    return state;
}

double approximation_ratio(double expectation, const DiagonalCost &cost) {
    double lo = cost.min();
    double hi = cost.max();
    if (lo == hi) {
        throw UndefinedRatio("approximation ratio is undefined for a constant cost table");
    }
    return (hi - expectation) / (hi - lo);
}

double approximation_ratio(const StateVector &state, const DiagonalCost &cost) {
    return approximation_ratio(expectation_diagonal(state, cost), cost);
}

namespace {

QaoaParams params_from_point(std::span<const double> x, std::size_t depth, bool symmetric) {
    if (symmetric) {
        return symmetric_lift(x);
    }
    return QaoaParams{{x.begin(), x.begin() + depth}, {x.begin() + depth, x.end()}};
}

bool integer_valued(const DiagonalCost &cost) {
    for (double v : cost.values()) {
        if (v != std::round(v)) {
            return false;
        }
    }
    return true;
}

}  // namespace

QaoaResult evaluate_depth_zero(const DiagonalCost &cost, const StateVector &init) {
    double e = expectation_diagonal(init, cost);
    std::optional<double> ratio;
    if (!cost.is_constant()) {
        ratio = approximation_ratio(e, cost);
    }
    return QaoaResult{e, ratio, QaoaParams{}, 1};
}

QaoaResult optimize_params(const DiagonalCost &cost, const MixerSpec &mixer, const StateVector &init,
                           std::size_t depth, const OptimizerConfig &config) {
    if (depth == 0) {
        throw std::invalid_argument("optimize_params needs depth >= 1");
    }
    if (config.restarts == 0) {
        throw std::invalid_argument("optimize_params needs at least one restart");
    }
    if (init.qubits() != cost.qubits()) {
        throw DimensionError("initial state and cost table disagree on the qubit count");
    }
    validate_mixer(mixer, init.qubits());

    const std::size_t dim = config.symmetric ? depth : 2 * depth;
    NelderMeadOptions nm{config.simplex_size, config.tolerance, config.evaluations_per_start};
    Objective objective = [&](std::span<const double> x) {
        StateVector state = run_qaoa(cost, mixer, init, params_from_point(x, depth, config.symmetric));
        return expectation_diagonal(state, cost);
    };

    std::vector<NelderMeadResult> runs(config.restarts);
    parallel_for(config.restarts, config.threads, [&](std::size_t r) {
        Rng rng = Rng::stream(config.seed, r);
        std::vector<double> x0(dim);
        for (double &v : x0) {
            v = rng.uniform(-std::numbers::pi, std::numbers::pi);
        }
        runs[r] = nelder_mead(objective, std::move(x0), nm);
    });

    std::size_t best = 0;
    std::size_t evaluations = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        evaluations += runs[r].evaluations;
        if (runs[r].value < runs[best].value) {
            best = r;
        }
    }

    QaoaParams params = params_from_point(runs[best].x, depth, config.symmetric);
    // Mixer angles are 2pi-periodic; phase angles only when every cost is an
    // integer.
    bool wrap_gammas = integer_valued(cost);
    for (std::size_t i = 0; i < depth; ++i) {
        params.betas[i] = wrap_angle(params.betas[i]);
        if (wrap_gammas) {
            params.gammas[i] = wrap_angle(params.gammas[i]);
        }
    }

    std::optional<double> ratio;
    if (!cost.is_constant()) {
        ratio = approximation_ratio(runs[best].value, cost);
    }
    return QaoaResult{runs[best].value, ratio, std::move(params), evaluations};
}

}  // namespace aoas
