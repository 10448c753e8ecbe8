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

#include "aoas/problems.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "aoas/error.hpp"

namespace aoas {

Graph::Graph(unsigned n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
    std::set<std::pair<unsigned, unsigned>> seen;
    for (const Edge &e : edges_) {
        if (e.u >= n_ || e.v >= n_) {
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") references a vertex >= " + std::to_string(n_));
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        }
        if (!std::isfinite(e.w)) {
            throw std::invalid_argument("edge weights must be finite");
        }
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
        }
    }
}

std::vector<unsigned> Graph::neighbors(unsigned v) const {
    std::vector<unsigned> out;
    for (const Edge &e : edges_) {
        if (e.u == v) out.push_back(e.v);
        if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::has_edge(unsigned u, unsigned v) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge &e) {
        return (e.u == u && e.v == v) || (e.u == v && e.v == u);
    });
}

double Graph::weight(unsigned u, unsigned v) const {
    for (const Edge &e : edges_) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            return e.w;
        }
    }
    throw std::out_of_range("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
}

bool Graph::is_connected() const {
    if (n_ == 0) {
        return true;
    }
    std::vector<bool> seen(n_, false);
    std::vector<unsigned> stack{0};
    seen[0] = true;
    unsigned reached = 1;
    while (!stack.empty()) {
        unsigned v = stack.back();
        stack.pop_back();
        for (unsigned w : neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

double Graph::total_abs_weight() const {
    double total = 0.0;
    for (const Edge &e : edges_) {
        total += std::abs(e.w);
    }
    return total;
}

Graph ring_graph(unsigned n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("ring graph needs an even vertex count >= 4, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (unsigned i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n, 1.0});
    }
    return Graph(n, std::move(edges));
}

Graph complete_graph(unsigned n, double weight) {
    std::vector<Edge> edges;
    for (unsigned u = 0; u < n; ++u) {
        for (unsigned v = u + 1; v < n; ++v) {
            edges.push_back({u, v, weight});
        }
    }
    return Graph(n, std::move(edges));
}

unsigned ProblemInstance::qubits() const {
    return kind == ProblemKind::one_hot_demo ? graph.vertices() * colors : graph.vertices();
}

ProblemInstance make_maxcut(Graph graph) {
    return ProblemInstance{ProblemKind::maxcut, std::move(graph), Sense::maximize};
}

ProblemInstance make_ring_of_disagrees(unsigned n) {
    return ProblemInstance{ProblemKind::ring_of_disagrees, ring_graph(n), Sense::minimize};
}

ProblemInstance make_one_hot_demo(Graph graph, unsigned colors) {
    if (colors < 2) {
        throw std::invalid_argument("one_hot_demo needs at least 2 colours");
    }
    return ProblemInstance{ProblemKind::one_hot_demo, std::move(graph), Sense::minimize, colors};
}

std::vector<std::vector<unsigned>> color_groups(const ProblemInstance &problem) {
    if (problem.kind != ProblemKind::one_hot_demo) {
        throw std::invalid_argument("colour groups are only defined for one_hot_demo instances");
    }
    std::vector<std::vector<unsigned>> groups(problem.graph.vertices());
    for (unsigned v = 0; v < problem.graph.vertices(); ++v) {
        for (unsigned c = 0; c < problem.colors; ++c) {
            groups[v].push_back(v * problem.colors + c);
        }
    }
    return groups;
}

double maxcut_value(const Graph &graph, Bitstring x) {
    if (graph.vertices() < 64 && (x >> graph.vertices()) != 0) {
        throw DimensionError("bitstring has bits beyond vertex " + std::to_string(graph.vertices() - 1));
    }
    double cut = 0.0;
    for (const Edge &e : graph.edges()) {
        if (((x >> e.u) ^ (x >> e.v)) & 1) {
            cut += e.w;
        }
    }
    return cut;
}

namespace {

double ising_energy(const Graph &graph, Bitstring x) {
    double energy = 0.0;
    for (const Edge &e : graph.edges()) {
        energy += (((x >> e.u) ^ (x >> e.v)) & 1) ? -e.w : e.w;
    }
    return energy;
}

double coloring_conflicts(const ProblemInstance &problem, Bitstring x) {
    double conflicts = 0.0;
    unsigned k = problem.colors;
    for (const Edge &e : problem.graph.edges()) {
        for (unsigned c = 0; c < k; ++c) {
            if (((x >> (e.u * k + c)) & 1) && ((x >> (e.v * k + c)) & 1)) {
                conflicts += e.w;
            }
        }
    }
    return conflicts;
}

}  // namespace

DiagonalCost cost_table(const ProblemInstance &problem) {
    unsigned n = problem.qubits();
    if (n > kMaxQubits) {
        throw SizeError("instance needs " + std::to_string(n) + " qubits, more than " +
                        std::to_string(kMaxQubits));
    }
    switch (problem.kind) {
        case ProblemKind::maxcut:
            return DiagonalCost::from_function(n, [&](Bitstring x) { return 0.0 - maxcut_value(problem.graph, x); });
        case ProblemKind::ring_of_disagrees:
            return DiagonalCost::from_function(n, [&](Bitstring x) { return ising_energy(problem.graph, x); });
        case ProblemKind::one_hot_demo:
            return DiagonalCost::from_function(n, [&](Bitstring x) { return coloring_conflicts(problem, x); });
    }
    throw std::logic_error("unknown problem kind");
}

}  // namespace aoas
