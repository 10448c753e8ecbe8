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

#include <cstdint>
#include <vector>

#include "aoas/statevector.hpp"

namespace aoas {

struct Edge {
    unsigned u;
    unsigned v;
    double w = 1.0;
};

/// Undirected weighted graph on vertices 0..n-1. Self-loops, duplicate
/// edges and non-finite weights are rejected at construction.
class Graph {
  public:
    Graph(unsigned n_vertices, std::vector<Edge> edges);

    unsigned vertices() const { return n_; }
    const std::vector<Edge> &edges() const { return edges_; }

    /// Sorted neighbour list of v.
    std::vector<unsigned> neighbors(unsigned v) const;
    /// Weight of edge {u, v}; throws std::out_of_range if absent.
    double weight(unsigned u, unsigned v) const;
    bool has_edge(unsigned u, unsigned v) const;
    bool is_connected() const;
    double total_abs_weight() const;

  private:
    unsigned n_;
    std::vector<Edge> edges_;
};

/// Cycle 0-1-...-(n-1)-0 with unit weights; n even and >= 4.
Graph ring_graph(unsigned n);
Graph complete_graph(unsigned n, double weight = 1.0);

enum class ProblemKind { maxcut, ring_of_disagrees, one_hot_demo };
enum class Sense { maximize, minimize };

/// An optimization instance over bitstrings.
///
///  - maxcut: maximize the cut weight; the cost table stores -cut.
///  - ring_of_disagrees: antiferromagnetic Ising ring, minimize
///    sum_{uv} w z_u z_v with z = 1 - 2 bit (equal to W - 2 cut). The table has
///    the same minimizers as maxcut, but this normalization is the one in
///    which optimal angles satisfy beta_i = -gamma_{p+1-i}.
///  - one_hot_demo: graph colouring with `colors` colours; qubit v*colors+c
///    means "vertex v has colour c" and the cost counts the weight of
///    monochromatic edges. Intended for XY mixers over the per-vertex groups.
struct ProblemInstance {
    ProblemKind kind;
    Graph graph;
    Sense sense;
    unsigned colors = 0;

    unsigned qubits() const;
};

ProblemInstance make_maxcut(Graph graph);
/// Requires an even cycle with unit weights.
ProblemInstance make_ring_of_disagrees(unsigned n);
ProblemInstance make_one_hot_demo(Graph graph, unsigned colors);

/// One-hot groups of a one_hot_demo instance, one per vertex.
std::vector<std::vector<unsigned>> color_groups(const ProblemInstance &problem);

/// Sum over edges of w * [bit_u != bit_v]. Throws DimensionError if x has
/// bits set at or above n_vertices.
double maxcut_value(const Graph &graph, Bitstring x);

/// Materializes the cost of every bitstring. Maximization instances are
/// negated so the engine always minimizes.
DiagonalCost cost_table(const ProblemInstance &problem);

}  // namespace aoas
