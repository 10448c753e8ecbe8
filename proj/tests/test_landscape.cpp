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

#include "gtest/gtest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "aoas/landscape.hpp"
#include "aoas/problems.hpp"
#include "aoas/qaoa.hpp"

using namespace aoas;

namespace {

Landscape synthetic(std::size_t rows, std::size_t cols, std::vector<double> values) {
    return {{0, 1, rows}, {0, 1, cols}, false, std::move(values)};
}

}  // namespace

TEST(landscape, axis_points) {
    GridAxis a{-1.0, 1.0, 5};
    EXPECT_EQ(a.at(0), -1.0);
    EXPECT_EQ(a.at(2), 0.0);
    EXPECT_EQ(a.at(4), 1.0);
}

TEST(landscape, scan_matches_direct_evaluation) {
    DiagonalCost c = cost_table(make_ring_of_disagrees(6));
    GridAxis g{-1.0, 1.0, 4}, b{-0.5, 0.5, 3};
    Landscape l = landscape_scan(c, TransverseField{}, StateVector::uniform(6), g, b, false);
    ASSERT_EQ(l.values.size(), 12u);
    StateVector s = run_qaoa(c, TransverseField{}, StateVector::uniform(6), {{g.at(2)}, {b.at(1)}});
    EXPECT_EQ(l.at(2, 1), expectation_diagonal(s, c));

    Landscape sym = landscape_scan(c, TransverseField{}, StateVector::uniform(6), g, g, true);
    StateVector t = run_qaoa(c, TransverseField{}, StateVector::uniform(6), symmetric_lift(std::vector{g.at(1), g.at(3)}));
    EXPECT_EQ(sym.at(1, 3), expectation_diagonal(t, c));
}

TEST(landscape, bad_axes_rejected) {
    DiagonalCost c = cost_table(make_ring_of_disagrees(4));
    EXPECT_THROW(landscape_scan(c, TransverseField{}, StateVector::uniform(4), {0, 1, 1}, {0, 1, 2}, false),
                 std::invalid_argument);
    EXPECT_THROW(landscape_scan(c, TransverseField{}, StateVector::uniform(4), {1, 0, 3}, {0, 1, 2}, false),
                 std::invalid_argument);
}

TEST(landscape, time_reversal_symmetry) {
    DiagonalCost c = cost_table(make_ring_of_disagrees(6));
    GridAxis a{-std::numbers::pi, std::numbers::pi, 21};
    Landscape l = landscape_scan(c, TransverseField{}, StateVector::uniform(6), a, a, true, 2);
    for (std::size_t i = 0; i < 21; ++i) {
        for (std::size_t j = 0; j < 21; ++j) {
            EXPECT_NEAR(l.at(i, j), l.at(20 - i, 20 - j), 1e-10);
        }
    }
}

TEST(landscape, csv_layout) {
    DiagonalCost c = cost_table(make_ring_of_disagrees(4));
    Landscape l = landscape_scan(c, TransverseField{}, StateVector::uniform(4), {0, 1, 2}, {0, 1, 2}, false);
    std::ostringstream out;
    write_landscape_csv(out, l);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "gamma,beta,expectation");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 4);

    l.symmetric = true;
    std::ostringstream sym;
    write_landscape_csv(sym, l);
    EXPECT_EQ(sym.str().substr(0, 25), "gamma1,gamma2,expectation");
}

TEST(landscape, minimum_clusters) {
    // Two separated minima, one a plateau of two cells; one touches the edge.
    Landscape l = synthetic(4, 5,
                            {5, 5, 5, 5, 5,  //
                             5, 1, 1, 5, 5,  //
                             5, 5, 5, 5, 2,  //
                             5, 5, 5, 5, 5});
    auto clusters = local_minimum_clusters(l);
    ASSERT_EQ(clusters.size(), 2u);
    EXPECT_EQ(clusters[0].value, 1);
    EXPECT_EQ(clusters[0].cells.size(), 2u);
    EXPECT_TRUE(clusters[0].interior);
    EXPECT_FALSE(clusters[1].interior);
}

TEST(landscape, plateau_with_lower_neighbour_is_not_a_minimum) {
    Landscape l = synthetic(3, 4, {5, 5, 5, 5, 5, 2, 2, 1, 5, 5, 5, 5});
    auto clusters = local_minimum_clusters(l);
    ASSERT_EQ(clusters.size(), 1u);
    EXPECT_EQ(clusters[0].value, 1);
}

TEST(landscape, mixed_neighbours) {
    Landscape saddle = synthetic(3, 3, {0, 2, 0, 2, 1, 2, 0, 2, 0});
    EXPECT_TRUE(has_mixed_neighbours(saddle, 1, 1));
    Landscape bowl = synthetic(3, 3, {2, 2, 2, 2, 1, 2, 2, 2, 2});
    EXPECT_FALSE(has_mixed_neighbours(bowl, 1, 1));
}
