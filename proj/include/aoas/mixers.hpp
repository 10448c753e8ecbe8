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

#include <variant>
#include <vector>

#include "aoas/statevector.hpp"

namespace aoas {

/// exp(-i beta sum_j X_j).
struct TransverseField {};

/// For each group (q_1..q_m), XY rotations on (q_1,q_2), ..., (q_{m-1},q_m),
/// (q_m,q_1) in that order. A two-qubit group is a single pair and a
/// one-qubit group does nothing. Groups must be disjoint.
struct XYRingGroups {
    std::vector<std::vector<unsigned>> groups;
};

/// One factor exp(-i beta H_k) of an ordered-product mixer.
struct MixerTerm {
    enum class Kind { x, xy };
    Kind kind;
    unsigned a;
    unsigned b = 0;  // second qubit for xy

    static MixerTerm x(unsigned q) { return {Kind::x, q, 0}; }
    static MixerTerm xy(unsigned i, unsigned j) { return {Kind::xy, i, j}; }
};

/// prod_k exp(-i beta H_k), applied in listed order (first term first).
struct OrderedProduct {
    std::vector<MixerTerm> terms;
};

using MixerSpec = std::variant<TransverseField, XYRingGroups, OrderedProduct>;

/// Throws std::invalid_argument unless the spec is usable on n qubits.
void validate_mixer(const MixerSpec &spec, unsigned n);

void apply_mixer(StateVector &state, const MixerSpec &spec, double beta);

/// The XY ring of a group expressed as an ordered product.
OrderedProduct as_ordered_product(const XYRingGroups &rings);

/// Accepts x iff every group has exactly one set bit. Throws if groups
/// overlap.
Predicate feasible_onehot_predicate(const std::vector<std::vector<unsigned>> &groups);

}  // namespace aoas
