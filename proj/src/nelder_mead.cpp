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

#include "aoas/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace aoas {

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0, const NelderMeadOptions &options) {
    const std::size_t dim = x0.size();
    if (dim == 0) {
        throw std::invalid_argument("Nelder-Mead needs at least one coordinate");
    }
    if (options.max_evaluations < dim + 1) {
        throw std::invalid_argument("Nelder-Mead budget smaller than the initial simplex");
    }

    std::size_t evaluations = 0;
    auto eval = [&](const std::vector<double> &x) {
        ++evaluations;
        return f(x);
    };

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        simplex[i + 1][i] += options.initial_step;
    }
    for (std::size_t i = 0; i <= dim; ++i) {
        values[i] = eval(simplex[i]);
    }

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);
    auto point_along = [&](double t, std::vector<double> &out, std::size_t worst) {
        // centroid + t * (centroid - worst)
        for (std::size_t k = 0; k < dim; ++k) {
            out[k] = centroid[k] + t * (centroid[k] - simplex[worst][k]);
        }
    };

    bool converged = false;
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::size_t best = order.front();
        std::size_t worst = order.back();
        std::size_t second_worst = order[dim - 1];

        if (values[worst] - values[best] <= options.f_tolerance) {
            converged = true;
            break;
        }
        if (evaluations >= options.max_evaluations) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k];
        }
        for (double &c : centroid) c /= static_cast<double>(dim);

        point_along(1.0, trial, worst);
        double reflected = eval(trial);
        if (reflected < values[best]) {
            if (evaluations < options.max_evaluations) {
                point_along(2.0, trial2, worst);
                double expanded = eval(trial2);
                if (expanded < reflected) {
                    simplex[worst] = trial2;
                    values[worst] = expanded;
                    continue;
                }
            }
            simplex[worst] = trial;
            values[worst] = reflected;
            continue;
        }
        if (reflected < values[second_worst]) {
            simplex[worst] = trial;
            values[worst] = reflected;
            continue;
        }
        if (evaluations >= options.max_evaluations) {
            break;
        }
        bool outside = reflected < values[worst];
        point_along(outside ? 0.5 : -0.5, trial2, worst);
        double contracted = eval(trial2);
        if (contracted < (outside ? reflected : values[worst])) {
            simplex[worst] = trial2;
            values[worst] = contracted;
            continue;
        }
        if (evaluations + dim > options.max_evaluations) {
            break;
        }
        // Shrink toward the best vertex.
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < dim; ++k) {
                simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
            }
            values[i] = eval(simplex[i]);
        }
    }

    std::size_t best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    return {simplex[best], values[best], evaluations, converged};
}

}  // namespace aoas
