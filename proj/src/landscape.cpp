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

#include "aoas/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "aoas/parallel.hpp"
#include "aoas/qaoa.hpp"

namespace aoas {

double GridAxis::at(std::size_t i) const {
    if (i + 1 == count) {
        return hi;
    }
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

double Landscape::min() const { return *std::min_element(values.begin(), values.end()); }

namespace {

void check_axis(const GridAxis &axis) {
    if (axis.count < 2) {
        throw std::invalid_argument("landscape axes need at least 2 grid points");
    }
    if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi) || !(axis.lo < axis.hi)) {
        throw std::invalid_argument("landscape axis range must satisfy lo < hi");
    }
}

}  // namespace

Landscape landscape_scan(const DiagonalCost &cost, const MixerSpec &mixer, const StateVector &init,
                         const GridAxis &rows, const GridAxis &cols, bool symmetric, unsigned threads) {
    check_axis(rows);
    check_axis(cols);
    Landscape out{rows, cols, symmetric, std::vector<double>(rows.count * cols.count)};
    parallel_for(rows.count, threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < cols.count; ++j) {
            double a = rows.at(i);
            double b = cols.at(j);
            QaoaParams params = symmetric ? symmetric_lift(std::vector<double>{a, b}) : QaoaParams{{a}, {b}};
            out.values[i * cols.count + j] = expectation_diagonal(run_qaoa(cost, mixer, init, params), cost);
        }
    });
    return out;
}

void write_landscape_csv(std::ostream &out, const Landscape &landscape) {
    out << (landscape.symmetric ? "gamma1,gamma2,expectation\n" : "gamma,beta,expectation\n");
    char line[128];
    for (std::size_t i = 0; i < landscape.rows.count; ++i) {
        for (std::size_t j = 0; j < landscape.cols.count; ++j) {
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", landscape.rows.at(i), landscape.cols.at(j),
                          landscape.at(i, j));
            out << line;
        }
    }
}

namespace {

template <typename F>
void for_each_neighbour(const Landscape &l, std::size_t i, std::size_t j, F &&f) {
    for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
            if (di == 0 && dj == 0) continue;
            long ni = static_cast<long>(i) + di;
            long nj = static_cast<long>(j) + dj;
            if (ni < 0 || nj < 0 || ni >= static_cast<long>(l.rows.count) || nj >= static_cast<long>(l.cols.count)) {
                continue;
            }
            f(static_cast<std::size_t>(ni), static_cast<std::size_t>(nj));
        }
    }
}

}  // namespace

std::vector<MinimumCluster> local_minimum_clusters(const Landscape &landscape, double tie_tolerance) {
    const std::size_t rows = landscape.rows.count;
    const std::size_t cols = landscape.cols.count;
    std::vector<bool> visited(rows * cols, false);
    std::vector<MinimumCluster> clusters;

    for (std::size_t start = 0; start < rows * cols; ++start) {
        if (visited[start]) continue;
        double value = landscape.values[start];
        MinimumCluster cluster{{}, value, true};
        bool is_minimum = true;
        std::vector<std::size_t> stack{start};
        visited[start] = true;
        while (!stack.empty()) {
            std::size_t cell = stack.back();
            stack.pop_back();
            std::size_t i = cell / cols, j = cell % cols;
            cluster.cells.emplace_back(i, j);
            if (i == 0 || j == 0 || i + 1 == rows || j + 1 == cols) {
                cluster.interior = false;
            }
            for_each_neighbour(landscape, i, j, [&](std::size_t ni, std::size_t nj) {
                std::size_t idx = ni * cols + nj;
                double v = landscape.values[idx];
                if (std::abs(v - value) <= tie_tolerance) {
                    if (!visited[idx]) {
                        visited[idx] = true;
                        stack.push_back(idx);
                    }
                } else if (v < value) {
                    is_minimum = false;
                }
            });
        }
        if (is_minimum) {
            std::sort(cluster.cells.begin(), cluster.cells.end());
            clusters.push_back(std::move(cluster));
        }
    }
    return clusters;
}

bool has_mixed_neighbours(const Landscape &landscape, std::size_t i, std::size_t j) {
    double centre = landscape.at(i, j);
    bool higher = false, lower = false;
    for_each_neighbour(landscape, i, j, [&](std::size_t ni, std::size_t nj) {
        double v = landscape.at(ni, nj);
        higher = higher || v > centre;
        lower = lower || v < centre;
    });
    return higher && lower;
}

}  // namespace aoas
