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

#include "aoas/json_io.hpp"

#include <fstream>
#include <string>

#include "aoas/error.hpp"

namespace aoas {

namespace {

template <typename T>
T field(const Json &doc, const char *key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw FormatError(std::string("missing field \"") + key + "\"");
    }
    try {
        return doc.at(key).get<T>();
    } catch (const Json::exception &e) {
        throw FormatError(std::string("field \"") + key + "\": " + e.what());
    }
}

}  // namespace

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path &path, const Json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << doc.dump(2) << '\n';
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

Graph graph_from_json(const Json &doc) {
    const auto n = field<unsigned>(doc, "n");
    const auto rows = field<std::vector<std::vector<double>>>(doc, "edges");
    std::vector<Edge> edges;
    for (const auto &row : rows) {
        if (row.size() != 2 && row.size() != 3) {
            throw FormatError("edge entries must be [u, v] or [u, v, w]");
        }
        for (std::size_t k = 0; k < 2; ++k) {
            if (row[k] < 0 || row[k] != static_cast<double>(static_cast<unsigned>(row[k]))) {
                throw FormatError("edge endpoints must be non-negative integers");
            }
        }
        edges.push_back({static_cast<unsigned>(row[0]), static_cast<unsigned>(row[1]), row.size() == 3 ? row[2] : 1.0});
    }
    return Graph(n, std::move(edges));
}

Json graph_to_json(const Graph &graph) {
    Json edges = Json::array();
    for (const Edge &e : graph.edges()) {
        edges.push_back({e.u, e.v, e.w});
    }
    return {{"n", graph.vertices()}, {"edges", edges}};
}

MixerSpec mixer_from_json(const Json &doc) {
    const auto variant = field<std::string>(doc, "variant");
    if (variant == "x") {
        return TransverseField{};
    }
    if (variant == "xy") {
        return XYRingGroups{field<std::vector<std::vector<unsigned>>>(doc, "groups")};
    }
    throw FormatError("unknown mixer variant \"" + variant + "\"");
}

Qubo qubo_from_json(const Json &doc) {
    Qubo q(field<unsigned>(doc, "n"));
    q.offset = field<double>(doc, "offset");
    q.linear = field<std::vector<double>>(doc, "linear");
    if (q.linear.size() != q.n) {
        throw FormatError("\"linear\" has " + std::to_string(q.linear.size()) + " entries for n = " +
                          std::to_string(q.n));
    }
    for (const Json &row : field<Json>(doc, "quadratic")) {
        if (!row.is_array() || row.size() != 3) {
            throw FormatError("quadratic entries must be [i, j, c]");
        }
        unsigned i, j;
        double c;
        try {
            i = row[0].get<unsigned>();
            j = row[1].get<unsigned>();
            c = row[2].get<double>();
        } catch (const Json::exception &e) {
            throw FormatError(std::string("quadratic entry: ") + e.what());
        }
        if (!q.quadratic.emplace(std::pair{i, j}, c).second) {
            throw FormatError("duplicate quadratic entry");
        }
    }
    try {
        q.validate();
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
    return q;
}

Json qubo_to_json(const Qubo &q) {
    Json quad = Json::array();
    for (const auto &[key, c] : q.quadratic) {
        quad.push_back({key.first, key.second, c});
    }
    return {{"n", q.n}, {"offset", q.offset}, {"linear", q.linear}, {"quadratic", quad}};
}

Json result_to_json(const QaoaResult &result) {
    Json doc;
    doc["expectation"] = result.expectation;
    doc["ratio"] = result.ratio ? Json(*result.ratio) : Json(nullptr);
    doc["gammas"] = result.best_params.gammas;
    doc["betas"] = result.best_params.betas;
    doc["evaluations"] = result.evaluations;
    return doc;
}

Json fit_to_json(const GroverScalingFit &fit) {
    Json per_n = Json::array();
    for (const GroverPoint &pt : fit.per_n) {
        per_n.push_back({{"n", pt.n}, {"T", pt.steps}, {"gamma", pt.gamma}});
    }
    return {{"slope", fit.slope}, {"intercept", fit.intercept}, {"per_n", per_n}};
}

Json encoding_to_json(const SpanningTreeEncoding &enc) {
    Json labels = Json::array();
    for (const VarLabel &l : enc.labels()) {
        labels.push_back(l.str());
    }
    Json doc;
    doc["graph"] = graph_to_json(enc.graph());
    doc["root"] = enc.root();
    doc["penalty_A"] = enc.penalty_A();
    doc["objective_B"] = enc.objective_B();
    doc["delta"] = enc.max_degree() ? Json(*enc.max_degree()) : Json(nullptr);
    doc["offset"] = enc.offset();
    doc["labels"] = labels;
    return doc;
}

SpanningTreeEncoding encoding_from_json(const Json &doc) {
    if (field<unsigned>(doc, "root") != 0) {
        throw FormatError("only root 0 is supported");
    }
    std::optional<unsigned> delta;
    if (!field<Json>(doc, "delta").is_null()) {
        delta = field<unsigned>(doc, "delta");
    }
    SpanningTreeEncoding enc(graph_from_json(field<Json>(doc, "graph")), field<double>(doc, "penalty_A"),
                             field<double>(doc, "objective_B"), delta, field<double>(doc, "offset"));
    try {
        for (const auto &text : field<std::vector<std::string>>(doc, "labels")) {
            enc.add(VarLabel::parse(text));
        }
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
    return enc;
}

Json solve_report(double energy, std::span<const std::uint8_t> x, const TreeDecoding &decoding) {
    std::string bits;
    for (std::uint8_t b : x) bits.push_back(b ? '1' : '0');
    Json edges = Json::array();
    for (auto [u, v] : decoding.edges) {
        edges.push_back({u, v});
    }
    Json violations = Json::array();
    for (const Violation &v : decoding.violations) {
        violations.push_back({{"kind", to_string(v.kind)}, {"vertex", v.vertex}, {"detail", v.detail}});
    }
    Json doc;
    doc["energy"] = energy;
    doc["bitstring"] = bits;
    doc["decoded_edges"] = edges;
    doc["feasible"] = decoding.feasible();
    doc["violations"] = violations;
    return doc;
}

}  // namespace aoas
