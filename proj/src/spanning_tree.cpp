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

#include "aoas/spanning_tree.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "aoas/error.hpp"

namespace aoas {

std::string VarLabel::str() const {
    switch (kind) {
        case Kind::x:
            return "x:" + std::to_string(a) + "-" + std::to_string(b);
        case Kind::y:
            return "y:" + std::to_string(a) + "@" + std::to_string(b);
        case Kind::z:
            return "z:" + std::to_string(a) + "-" + std::to_string(b) + "@" + std::to_string(c);
        case Kind::d:
            return "d:" + std::to_string(a) + "#" + std::to_string(b);
    }
    return {};
}

namespace {

// Parses the unsigned integers of `text` separated by exactly `separators`.
std::vector<unsigned> parse_fields(std::string_view text, std::string_view separators) {
    std::vector<unsigned> out;
    const char *p = text.data();
    const char *end = text.data() + text.size();
    for (std::size_t k = 0; k <= separators.size(); ++k) {
        unsigned value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || next == p) {
            throw std::invalid_argument("malformed variable label '" + std::string(text) + "'");
        }
        out.push_back(value);
        p = next;
        if (k < separators.size()) {
            if (p == end || *p != separators[k]) {
                throw std::invalid_argument("malformed variable label '" + std::string(text) + "'");
            }
            ++p;
        }
    }
    if (p != end) {
        throw std::invalid_argument("malformed variable label '" + std::string(text) + "'");
    }
    return out;
}

}  // namespace

VarLabel VarLabel::parse(std::string_view text) {
    if (text.size() < 3 || text[1] != ':') {
        throw std::invalid_argument("malformed variable label '" + std::string(text) + "'");
    }
    std::string_view body = text.substr(2);
    switch (text[0]) {
        case 'x': {
            auto f = parse_fields(body, "-");
            return {Kind::x, f[0], f[1]};
        }
        case 'y': {
            auto f = parse_fields(body, "@");
            return {Kind::y, f[0], f[1]};
        }
        case 'z': {
            auto f = parse_fields(body, "-@");
            return {Kind::z, f[0], f[1], f[2]};
        }
        case 'd': {
            auto f = parse_fields(body, "#");
            return {Kind::d, f[0], f[1]};
        }
    }
    throw std::invalid_argument("unknown variable kind in label '" + std::string(text) + "'");
}

SpanningTreeEncoding::SpanningTreeEncoding(Graph graph, double penalty_A, double objective_B,
                                           std::optional<unsigned> max_degree, double offset)
    : graph_(std::move(graph)),
      penalty_A_(penalty_A),
      objective_B_(objective_B),
      max_degree_(max_degree),
      offset_(offset) {}

unsigned SpanningTreeEncoding::add(const VarLabel &label) {
    auto [it, inserted] = index_.try_emplace(label, static_cast<unsigned>(labels_.size()));
    if (!inserted) {
        throw std::invalid_argument("duplicate variable label " + label.str());
    }
    labels_.push_back(label);
    return it->second;
}

std::optional<unsigned> SpanningTreeEncoding::find(const VarLabel &label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

unsigned SpanningTreeEncoding::at(const VarLabel &label) const {
    if (auto idx = find(label)) {
        return *idx;
    }
    throw std::out_of_range("no variable " + label.str());
}

PairRule SpanningTreeEncoding::pair_rule() const {
    return [this](std::span<const unsigned> monomial) -> std::pair<unsigned, unsigned> {
        const VarLabel *arc = nullptr;
        unsigned arc_index = 0;
        for (unsigned v : monomial) {
            if (labels_.at(v).kind == VarLabel::Kind::x) {
                arc = &labels_[v];
                arc_index = v;
            }
        }
        if (arc == nullptr) {
            throw std::logic_error("cubic monomial without a parent variable");
        }
        for (unsigned v : monomial) {
            const VarLabel &l = labels_.at(v);
            if (l.kind == VarLabel::Kind::y && l.a == arc->a) {
                return {arc_index, v};
            }
        }
        throw std::logic_error("cubic monomial without the parent's level variable");
    };
}

double SpanningTreeEncoding::objective_energy(std::span<const std::uint8_t> x) const {
    double total = 0.0;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const VarLabel &l = labels_[i];
        if (l.kind == VarLabel::Kind::x && x[i]) {
            total += graph_.weight(l.a, l.b);
        }
    }
    return offset_ + objective_B_ * total;
}

std::pair<Pubo, SpanningTreeEncoding> spanning_tree_pubo(const Graph &graph, const SpanningTreeOptions &options) {
    const unsigned n = graph.vertices();
    if (n < 2) {
        throw std::invalid_argument("spanning-tree encoding needs at least 2 vertices");
    }
    if (!graph.is_connected()) {
        throw InfeasibleInstance("graph is disconnected; it has no spanning tree");
    }
    if (!(options.objective_B > 0.0) || !std::isfinite(options.objective_B)) {
        throw std::invalid_argument("objective weight B must be positive");
    }
    const double B = options.objective_B;
    const double A = options.penalty_A.value_or(B * (graph.total_abs_weight() + 1.0));
    double positive = 0.0;
    for (const Edge &e : graph.edges()) {
        positive += std::max(e.w, 0.0);
    }
    if (!std::isfinite(A) || A < B * (positive + 1.0)) {
        throw std::invalid_argument("penalty weight A must be at least B * (total positive weight + 1)");
    }

    SpanningTreeEncoding enc(graph, A, B, options.max_degree, options.offset);
    constexpr unsigned root = 0;
    using K = VarLabel::Kind;

    for (unsigned v = 1; v < n; ++v) {
        for (unsigned u : graph.neighbors(v)) {
            enc.add({K::x, u, v});
        }
    }
    for (unsigned v = 1; v < n; ++v) {
        for (unsigned l = 2; l <= n; ++l) {
            enc.add({K::y, v, l});
        }
    }
    if (options.max_degree) {
        for (unsigned v = 0; v < n; ++v) {
            for (unsigned k = 0; k <= *options.max_degree; ++k) {
                enc.add({K::d, v, k});
            }
        }
    }

    Pubo p(enc.variables());
    p.add_constant(options.offset);
    for (unsigned v = 1; v < n; ++v) {
        std::vector<std::pair<unsigned, double>> parents, levels;
        for (unsigned u : graph.neighbors(v)) {
            parents.emplace_back(enc.at({K::x, u, v}), 1.0);
        }
        for (unsigned l = 2; l <= n; ++l) {
            levels.emplace_back(enc.at({K::y, v, l}), 1.0);
        }
        p.add_square(parents, -1.0, A);
        p.add_square(levels, -1.0, A);

        for (unsigned u : graph.neighbors(v)) {
            p.add({enc.at({K::x, u, v})}, B * graph.weight(u, v));
            if (u == root) {
                continue;
            }
            // Parent u may not sit at or below v's level.
            for (unsigned l = 2; l <= n; ++l) {
                for (unsigned lp = l; lp <= n; ++lp) {
                    p.add({enc.at({K::y, v, l}), enc.at({K::y, u, lp}), enc.at({K::x, u, v})}, A);
                }
            }
        }
    }
    if (options.max_degree) {
        for (unsigned v = 0; v < n; ++v) {
            std::vector<std::pair<unsigned, double>> slack, balance;
            for (unsigned k = 0; k <= *options.max_degree; ++k) {
                slack.emplace_back(enc.at({K::d, v, k}), 1.0);
                balance.emplace_back(enc.at({K::d, v, k}), -static_cast<double>(k));
            }
            for (unsigned w : graph.neighbors(v)) {
                if (w != root) {
                    balance.emplace_back(enc.at({K::x, v, w}), 1.0);
                }
            }
            p.add_square(slack, -1.0, A);
            p.add_square(balance, v == root ? 0.0 : 1.0, A);
        }
    }
    return {std::move(p), std::move(enc)};
}

std::pair<Qubo, SpanningTreeEncoding> spanning_tree_qubo(const Graph &graph, const SpanningTreeOptions &options) {
    auto [pubo, enc] = spanning_tree_pubo(graph, options);
    Quadratization quad = quadratize(pubo, 2.0 * enc.penalty_A(), enc.pair_rule());
    for (const Ancilla &anc : quad.ancillas) {
        const VarLabel &arc = enc.labels().at(anc.a);
        const VarLabel &level = enc.labels().at(anc.b);
        unsigned idx = enc.add({VarLabel::Kind::z, arc.a, arc.b, level.b});
        if (idx != anc.index) {
            throw std::logic_error("ancilla numbering out of step with the encoding");
        }
    }
    return {std::move(quad.qubo), std::move(enc)};
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::parent_count:
            return "parent_count";
        case ViolationKind::level_count:
            return "level_count";
        case ViolationKind::level_order:
            return "level_order";
        case ViolationKind::degree:
            return "degree";
        case ViolationKind::ancilla:
            return "ancilla";
    }
    return "unknown";
}

TreeDecoding decode_tree(std::span<const std::uint8_t> x, const SpanningTreeEncoding &enc) {
    if (x.size() != enc.variables()) {
        throw std::invalid_argument("assignment has " + std::to_string(x.size()) + " values, encoding has " +
                                    std::to_string(enc.variables()));
    }
    using K = VarLabel::Kind;
    const unsigned n = enc.graph().vertices();
    TreeDecoding out;
    std::vector<unsigned> parent_count(n, 0), children(n, 0);
    std::vector<std::vector<unsigned>> levels(n);
    std::vector<unsigned> slack_count(n, 0), slack_sum(n, 0);

    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        const VarLabel &l = enc.labels()[i];
        switch (l.kind) {
            case K::x:
                out.edges.emplace_back(l.a, l.b);
                ++parent_count[l.b];
                if (l.b != enc.root()) ++children[l.a];
                break;
            case K::y:
                levels[l.a].push_back(l.b);
                break;
            case K::d:
                ++slack_count[l.a];
                slack_sum[l.a] += l.b;
                break;
            case K::z:
                break;
        }
    }
    levels[enc.root()] = {1};

    for (unsigned v = 1; v < n; ++v) {
        if (parent_count[v] != 1) {
            out.violations.push_back({ViolationKind::parent_count, v,
                                      "vertex " + std::to_string(v) + " has " + std::to_string(parent_count[v]) +
                                          " parents"});
        }
        if (levels[v].size() != 1) {
            out.violations.push_back({ViolationKind::level_count, v,
                                      "vertex " + std::to_string(v) + " has " + std::to_string(levels[v].size()) +
                                          " levels"});
        }
    }
    for (auto [u, v] : out.edges) {
        if (u == enc.root()) continue;
        bool bad = false;
        for (unsigned lv : levels[v]) {
            for (unsigned lu : levels[u]) {
                bad = bad || lu >= lv;
            }
        }
        if (bad) {
            out.violations.push_back({ViolationKind::level_order, v,
                                      "parent " + std::to_string(u) + " is not above vertex " + std::to_string(v)});
        }
    }
    if (enc.max_degree()) {
        for (unsigned v = 0; v < n; ++v) {
            unsigned degree = children[v] + (v == enc.root() ? 0 : 1);
            if (slack_count[v] != 1 || slack_sum[v] != degree) {
                out.violations.push_back({ViolationKind::degree, v,
                                          "vertex " + std::to_string(v) + " has degree " + std::to_string(degree) +
                                              ", bound " + std::to_string(*enc.max_degree())});
            }
        }
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        const VarLabel &l = enc.labels()[i];
        if (l.kind != K::z) continue;
        std::uint8_t product = x[enc.at({K::x, l.a, l.b})] & x[enc.at({K::y, l.a, l.c})];
        if (x[i] != product) {
            out.violations.push_back({ViolationKind::ancilla, l.b, "ancilla " + l.str() + " inconsistent"});
        }
    }
    return out;
}

Assignment encode_tree(const SpanningTreeEncoding &enc, std::span<const std::pair<unsigned, unsigned>> tree) {
    using K = VarLabel::Kind;
    const Graph &g = enc.graph();
    const unsigned n = g.vertices();
    if (tree.size() + 1 != n) {
        throw std::invalid_argument("a spanning tree needs exactly n-1 edges");
    }
    std::vector<std::vector<unsigned>> adj(n);
    for (auto [u, v] : tree) {
        if (u >= n || v >= n || !g.has_edge(u, v)) {
            throw std::invalid_argument("tree edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} is not a graph edge");
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> depth(n, -1);
    std::vector<unsigned> parent(n, 0);
    std::queue<unsigned> queue;
    depth[enc.root()] = 0;
    queue.push(enc.root());
    while (!queue.empty()) {
        unsigned u = queue.front();
        queue.pop();
        for (unsigned v : adj[u]) {
            if (depth[v] < 0) {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                queue.push(v);
            }
        }
    }
    if (std::any_of(depth.begin(), depth.end(), [](int d) { return d < 0; })) {
        throw std::invalid_argument("edges do not form a spanning tree");
    }

    Assignment x(enc.variables(), 0);
    for (unsigned v = 1; v < n; ++v) {
        x[enc.at({K::x, parent[v], v})] = 1;
        x[enc.at({K::y, v, static_cast<unsigned>(depth[v]) + 1})] = 1;
    }
    if (enc.max_degree()) {
        for (unsigned v = 0; v < n; ++v) {
            unsigned degree = static_cast<unsigned>(adj[v].size());
            auto slack = enc.find({K::d, v, degree});
            if (!slack) {
                throw std::invalid_argument("tree exceeds the degree bound at vertex " + std::to_string(v));
            }
            x[*slack] = 1;
        }
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        const VarLabel &l = enc.labels()[i];
        if (l.kind == K::z) {
            x[i] = x[enc.at({K::x, l.a, l.b})] & x[enc.at({K::y, l.a, l.c})];
        }
    }
    return x;
}

}  // namespace aoas
