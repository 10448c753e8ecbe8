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
#include <iosfwd>
#include <vector>

#include "aoas/mixers.hpp"
#include "aoas/statevector.hpp"

namespace aoas {

/// count evenly spaced points from lo to hi inclusive.
struct GridAxis {
    double lo;
    double hi;
    std::size_t count;

    double at(std::size_t i) const;
};

/// Expectation values on a 2-D angle grid, row-major: values[i * cols + j]
/// belongs to (rows.at(i), cols.at(j)).
///
/// symmetric: p = 2, coordinates (gamma_1, gamma_2), betas = (-gamma_2, -gamma_1).
/// otherwise: p = 1, coordinates (gamma, beta).
struct Landscape {
    GridAxis rows;
    GridAxis cols;
    bool symmetric;
    std::vector<double> values;

    double at(std::size_t i, std::size_t j) const { return values[i * cols.count + j]; }
    double min() const;
};

Landscape landscape_scan(const DiagonalCost &cost, const MixerSpec &mixer, const StateVector &init,
                         const GridAxis &rows, const GridAxis &cols, bool symmetric, unsigned threads = 1);

/// Writes "gamma1,gamma2,expectation" (symmetric) or "gamma,beta,expectation"
/// followed by one row per cell in row-major order, 17 significant digits.
void write_landscape_csv(std::ostream &out, const Landscape &landscape);

/// A maximal 8-connected set of equal-valued cells (within tie_tolerance)
/// whose outside neighbours are all strictly higher.
struct MinimumCluster {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    double value;
    /// No cell lies on the grid boundary.
    bool interior;
};

std::vector<MinimumCluster> local_minimum_clusters(const Landscape &landscape, double tie_tolerance = 1e-12);

/// Cell has at least one strictly higher and one strictly lower 8-neighbour.
bool has_mixed_neighbours(const Landscape &landscape, std::size_t i, std::size_t j);

}  // namespace aoas
