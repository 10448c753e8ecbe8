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

#include <filesystem>
#include <span>

#include "json.hpp"

#include "aoas/grover.hpp"
#include "aoas/mixers.hpp"
#include "aoas/problems.hpp"
#include "aoas/pubo.hpp"
#include "aoas/qaoa.hpp"
#include "aoas/spanning_tree.hpp"

namespace aoas {

using Json = nlohmann::json;

/// Parse failures and schema mismatches throw FormatError.
Json read_json_file(const std::filesystem::path &path);
/// Two-space indent and a trailing newline.
void write_json_file(const std::filesystem::path &path, const Json &doc);

/// {"n": int, "edges": [[u, v, w], ...]}; a missing weight means 1.
Graph graph_from_json(const Json &doc);
Json graph_to_json(const Graph &graph);

/// {"variant": "x" | "xy", "groups": [[...], ...]}. "groups" is required
/// for "xy" and ignored for "x".
MixerSpec mixer_from_json(const Json &doc);

/// {"n": int, "offset": float, "linear": [...], "quadratic": [[i, j, c], ...]}.
Qubo qubo_from_json(const Json &doc);
Json qubo_to_json(const Qubo &q);

/// {"expectation", "ratio" (null when undefined), "gammas", "betas", "evaluations"}.
Json result_to_json(const QaoaResult &result);

/// {"slope", "intercept", "per_n": [{"n", "T", "gamma"}, ...]}.
Json fit_to_json(const GroverScalingFit &fit);

/// {"graph", "root", "penalty_A", "objective_B", "delta", "offset",
///  "labels": [...]} where labels[i] names variable i.
Json encoding_to_json(const SpanningTreeEncoding &enc);
SpanningTreeEncoding encoding_from_json(const Json &doc);

/// {"energy", "bitstring" (variable 0 first), "decoded_edges": [[u, v], ...],
///  "feasible", "violations": [{"kind", "vertex", "detail"}, ...]}.
Json solve_report(double energy, std::span<const std::uint8_t> x, const TreeDecoding &decoding);

}  // namespace aoas
