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

#include "aoas/error.hpp"
#include "aoas/problems.hpp"
#include "aoas/random.hpp"

using namespace aoas;

TEST(problems, graph_validation) {
    EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 1, INFINITY}}), std::invalid_argument);
    Graph g(3, {{0, 1, 2.0}, {2, 1}});
    EXPECT_EQ(g.weight(1, 0), 2.0);
    EXPECT_EQ(g.weight(1, 2), 1.0);
    EXPECT_THROW(g.weight(0, 2), std::out_of_range);
    EXPECT_EQ(g.neighbors(1), (std::vector<unsigned>{0, 2}));
    EXPECT_TRUE(g.is_connected());
    EXPECT_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
    EXPECT_EQ(Graph(3, {{0, 1, -2.0}, {1, 2, 1.5}}).total_abs_weight(), 3.5);
}

TEST(problems, ring_graph_shape) {
    Graph r = ring_graph(6);
    EXPECT_EQ(r.edges().size(), 6u);
    EXPECT_TRUE(r.has_edge(5, 0));
    EXPECT_THROW(ring_graph(5), std::invalid_argument);
    EXPECT_THROW(ring_graph(2), std::invalid_argument);
    EXPECT_EQ(complete_graph(5).edges().size(), 10u);
}

TEST(problems, maxcut_value_examples) {
    Graph r = ring_graph(4);
    EXPECT_EQ(maxcut_value(r, 0b0101), 4.0);
    EXPECT_EQ(maxcut_value(r, 0b0000), 0.0);
    EXPECT_EQ(maxcut_value(r, 0b0011), 2.0);
    EXPECT_THROW(maxcut_value(r, 0b10000), DimensionError);
}

TEST(problems, maxcut_table_matches_direct_evaluation) {
    Rng rng(3);
    Graph g(3, {{0, 1, rng.uniform(0, 2)}, {1, 2, rng.uniform(0, 2)}, {0, 2, rng.uniform(0, 2)}});
    DiagonalCost c = cost_table(make_maxcut(g));
    for (Bitstring x = 0; x < 8; ++x) {
        double cut = 0.0;
        for (const Edge &e : g.edges()) {
            if (((x >> e.u) & 1) != ((x >> e.v) & 1)) cut += e.w;
        }
        EXPECT_NEAR(c[x], -cut, 1e-15);
    }
    EXPECT_FALSE(std::signbit(c[0]));
}

TEST(problems, ring_table_is_ising_energy) {
    DiagonalCost c = cost_table(make_ring_of_disagrees(8));
    for (Bitstring x = 0; x < 256; ++x) {
        EXPECT_EQ(c[x], 8.0 - 2.0 * maxcut_value(ring_graph(8), x));
    }
    EXPECT_EQ(c.min(), -8.0);
    EXPECT_EQ(c[0b01010101], -8.0);
    EXPECT_EQ(c[0b10101010], -8.0);
}

TEST(problems, one_hot_demo_counts_monochromatic_edges) {
    ProblemInstance p = make_one_hot_demo(Graph(2, {{0, 1, 2.5}}), 2);
    EXPECT_EQ(p.qubits(), 4u);
    DiagonalCost c = cost_table(p);
    // vertex 0 colour 0 (bit 0), vertex 1 colour 0 (bit 2): conflict
    EXPECT_EQ(c[0b0101], 2.5);
    EXPECT_EQ(c[0b1001], 0.0);
    EXPECT_EQ(c[0b1010], 2.5);
    EXPECT_EQ(color_groups(p), (std::vector<std::vector<unsigned>>{{0, 1}, {2, 3}}));
    EXPECT_THROW(make_one_hot_demo(Graph(2, {{0, 1}}), 1), std::invalid_argument);
}

TEST(problems, oversize_tables_rejected) {
    EXPECT_THROW(cost_table(make_ring_of_disagrees(28)), SizeError);
    EXPECT_THROW(cost_table(make_one_hot_demo(complete_graph(9), 3)), SizeError);
}
