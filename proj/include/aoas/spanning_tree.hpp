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

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aoas/problems.hpp"
#include "aoas/pubo.hpp"

namespace aoas {

/// Name of one binary variable of the level-based spanning-tree encoding.
///
///   x:u-v   u is the parent of v                  (a = u, b = v)
///   y:v@l   v sits at level l, l in 2..n           (a = v, b = l)
///   z:u-v@l ancilla for x:u-v * y:u@l              (a = u, b = v, c = l)
///   d:v#k   degree slack: v has degree k           (a = v, b = k)
struct VarLabel {
    enum class Kind { x, y, z, d };
    Kind kind;
    unsigned a;
    unsigned b;
    unsigned c = 0;

    std::string str() const;
    static VarLabel parse(std::string_view text);
    auto operator<=>(const VarLabel &) const = default;
};

struct SpanningTreeOptions {
    double objective_B = 1.0;
    /// Defaults to objective_B * (sum |w| + 1).
    std::optional<double> penalty_A;
    /// Optional degree bound Delta.
    std::optional<unsigned> max_degree;
    /// Constant added to every energy.
    double offset = 0.0;
};

/// Variable map and parameters of the encoding. The root is vertex 0, sits at
/// level 1 and carries no variables.
class SpanningTreeEncoding {
  public:
    SpanningTreeEncoding(Graph graph, double penalty_A, double objective_B, std::optional<unsigned> max_degree,
                         double offset);

    const Graph &graph() const { return graph_; }
    unsigned root() const { return 0; }
    double penalty_A() const { return penalty_A_; }
    double objective_B() const { return objective_B_; }
    std::optional<unsigned> max_degree() const { return max_degree_; }
    double offset() const { return offset_; }

    unsigned variables() const { return static_cast<unsigned>(labels_.size()); }
    const std::vector<VarLabel> &labels() const { return labels_; }
    /// Appends a label; throws if it is already present.
    unsigned add(const VarLabel &label);
    std::optional<unsigned> find(const VarLabel &label) const;
    unsigned at(const VarLabel &label) const;

    /// Chooses (x:u-v, y:u@l') in each cubic monomial y:v@l * y:u@l' * x:u-v.
    PairRule pair_rule() const;

    /// offset + B * sum of arc weights with x = 1: the energy a
    /// zero-penalty assignment would have.
    double objective_energy(std::span<const std::uint8_t> x) const;

  private:
    Graph graph_;
    double penalty_A_;
    double objective_B_;
    std::optional<unsigned> max_degree_;
    double offset_;
    std::vector<VarLabel> labels_;
    std::map<VarLabel, unsigned> index_;
};

/// Degree-3 polynomial whose zero-penalty assignments are the spanning trees
/// of the graph rooted at 0:
///   A sum_{v!=r} (sum_u x(u,v) - 1)^2 + A sum_{v!=r} (sum_l y(v,l) - 1)^2
///   + A sum_{v!=r} sum_{u!=r} sum_{l' >= l} y(v,l) y(u,l') x(u,v)
///   + B sum w(u,v) x(u,v)
/// plus, with a degree bound, A (sum_k d(v,k) - 1)^2 + A (deg_v - sum_k k d(v,k))^2
/// for every vertex, where deg_v = #children + [v != r].
/// Throws InfeasibleInstance for disconnected graphs.
std::pair<Pubo, SpanningTreeEncoding> spanning_tree_pubo(const Graph &graph, const SpanningTreeOptions &options);

/// spanning_tree_pubo followed by quadratize with penalty 2A and the
/// encoding's pair rule; the ancillas are added to the encoding as z labels.
std::pair<Qubo, SpanningTreeEncoding> spanning_tree_qubo(const Graph &graph, const SpanningTreeOptions &options);

enum class ViolationKind { parent_count, level_count, level_order, degree, ancilla };

struct Violation {
    ViolationKind kind;
    unsigned vertex;
    std::string detail;
};

std::string to_string(ViolationKind kind);

struct TreeDecoding {
    /// (parent, child) for every x = 1.
    std::vector<std::pair<unsigned, unsigned>> edges;
    std::vector<Violation> violations;

    bool feasible() const { return violations.empty(); }
};

TreeDecoding decode_tree(std::span<const std::uint8_t> x, const SpanningTreeEncoding &enc);

/// Zero-penalty assignment for a spanning tree given as undirected edges:
/// levels are BFS depth + 1, slacks and ancillas are set consistently.
Assignment encode_tree(const SpanningTreeEncoding &enc, std::span<const std::pair<unsigned, unsigned>> tree);

}  // namespace aoas
