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

#include "aoas/grover.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "aoas/error.hpp"
#include "aoas/parallel.hpp"

namespace aoas {
namespace {

void phase_target(StateVector &state, Bitstring target, double gamma) {
    state.amplitudes()[target] *= std::polar(1.0, -gamma);
}

std::size_t step_budget(unsigned n, const GroverScalingOptions &options) {
    return static_cast<std::size_t>(std::ceil(options.budget_factor * std::sqrt(std::ldexp(1.0, n)))) +
           options.budget_offset;
}

}  // namespace

void grover_step(StateVector &state, Bitstring target, double gamma) {
    if (target >= state.size()) {
        throw std::out_of_range("Grover target " + std::to_string(target) + " out of range");
    }
    const double mixer_angle = std::numbers::pi / state.qubits();
    phase_target(state, target, gamma);
    apply_rx_all(state, mixer_angle);
    phase_target(state, target, -gamma);
    apply_rx_all(state, mixer_angle);
}

GroverRun run_grover(unsigned n, Bitstring target, double gamma, std::size_t max_steps) {
    if (max_steps < 1) {
        throw std::invalid_argument("run_grover needs max_steps >= 1");
    }
    StateVector state = StateVector::uniform(n);
    if (target >= state.size()) {
        throw std::out_of_range("Grover target " + std::to_string(target) + " out of range");
    }
    GroverRun run{n, target, gamma, {}};
    run.trace.reserve(max_steps);
    for (std::size_t k = 0; k < max_steps; ++k) {
        grover_step(state, target, gamma);
        run.trace.push_back(std::min(1.0, state.probability(target)));
    }
    return run;
}

std::optional<std::size_t> first_hit(const GroverRun &run, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw std::invalid_argument("threshold must lie in (0, 1)");
    }
    for (std::size_t k = 0; k < run.trace.size(); ++k) {
        if (run.trace[k] >= threshold) {
            return k + 1;
        }
    }
    return std::nullopt;
}

std::pair<double, double> fit_log2_line(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::invalid_argument("line fit needs matching lists of at least two points");
    }
    double m = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double y = std::log2(ys[i]);
        sx += xs[i];
        sy += y;
        sxx += xs[i] * xs[i];
        sxy += xs[i] * y;
    }
    double denom = m * sxx - sx * sx;
    if (denom == 0.0) {
        throw std::invalid_argument("line fit needs at least two distinct x values");
    }
    double slope = (m * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / m;
    return {slope, intercept};
}

std::vector<GroverRun> grover_sweep(std::span<const unsigned> ns, const GroverScalingOptions &options) {
    if (options.gamma_scan < 1) {
        throw std::invalid_argument("gamma scan needs at least one point");
    }
    std::vector<GroverRun> runs(ns.size() * options.gamma_scan);
    parallel_for(runs.size(), options.threads, [&](std::size_t idx) {
        std::size_t i = idx / options.gamma_scan;
        std::size_t k = idx % options.gamma_scan + 1;
        double gamma = std::numbers::pi * static_cast<double>(k) / static_cast<double>(options.gamma_scan);
        runs[idx] = run_grover(ns[i], options.target, gamma, step_budget(ns[i], options));
    });
    return runs;
}

namespace {

void check_fit_sizes(std::span<const unsigned> ns) {
    std::set<unsigned> distinct(ns.begin(), ns.end());
    if (distinct.size() < 4 || distinct.size() != ns.size()) {
        throw std::invalid_argument("scaling fit needs at least 4 distinct register sizes");
    }
}

}  // namespace

GroverScalingFit scaling_fit(std::span<const unsigned> ns, const GroverScalingOptions &options) {
    check_fit_sizes(ns);
    return scaling_fit(ns, grover_sweep(ns, options), options);
}

GroverScalingFit scaling_fit(std::span<const unsigned> ns, std::span<const GroverRun> runs,
                             const GroverScalingOptions &options) {
    check_fit_sizes(ns);
    if (runs.size() != ns.size() * options.gamma_scan) {
        throw std::invalid_argument("run list does not match the sweep layout");
    }
    GroverScalingFit fit{0.0, 0.0, {}};
    std::vector<unsigned> missing;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        std::optional<GroverPoint> best;
        for (std::size_t k = 0; k < options.gamma_scan; ++k) {
            const GroverRun &run = runs[i * options.gamma_scan + k];
            if (auto hit = first_hit(run, options.threshold); hit && (!best || *hit < best->steps)) {
                best = GroverPoint{ns[i], *hit, run.gamma};
            }
        }
        if (best) {
            fit.per_n.push_back(*best);
        } else {
            missing.push_back(ns[i]);
        }
    }
    if (!missing.empty()) {
        std::string list;
        for (unsigned n : missing) {
            list += (list.empty() ? "" : ", ") + std::to_string(n);
        }
        throw NoHitError("success probability never reached " + std::to_string(options.threshold) +
                             " for n = " + list,
                         missing);
    }
    std::vector<double> xs, ys;
    for (const GroverPoint &pt : fit.per_n) {
        xs.push_back(pt.n);
        ys.push_back(static_cast<double>(pt.steps));
    }
    std::tie(fit.slope, fit.intercept) = fit_log2_line(xs, ys);
    return fit;
}

double reference_query_count(unsigned n) {
    return std::sqrt(std::ldexp(1.0, n)) * std::numbers::pi / (2.0 * std::numbers::sqrt2);
}

void write_grover_csv(std::ostream &out, std::span<const GroverRun> runs) {
    out << "n,gamma,step,success_probability\n";
    char line[96];
    for (const GroverRun &run : runs) {
        for (std::size_t k = 0; k < run.trace.size(); ++k) {
            std::snprintf(line, sizeof line, "%u,%.17g,%zu,%.17g\n", run.n, run.gamma, k + 1, run.trace[k]);
            out << line;
        }
    }
}

}  // namespace aoas
