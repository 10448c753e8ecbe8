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

#include "aoas/mixers.hpp"

#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace aoas {
namespace {

void check_disjoint(const std::vector<std::vector<unsigned>> &groups, unsigned limit) {
    std::set<unsigned> seen;
    for (const auto &group : groups) {
        for (unsigned q : group) {
            if (q >= limit) {
                throw std::invalid_argument("group index " + std::to_string(q) + " out of range");
            }
            if (!seen.insert(q).second) {
                throw std::invalid_argument("qubit " + std::to_string(q) + " appears in two groups");
            }
        }
    }
}

// Pairs of the closed ring over one group.
template <typename F>
void for_each_ring_pair(const std::vector<unsigned> &group, F &&f) {
    std::size_t m = group.size();
    if (m < 2) {
        return;
    }
    if (m == 2) {
        f(group[0], group[1]);
        return;
    }
    for (std::size_t k = 0; k < m; ++k) {
        f(group[k], group[(k + 1) % m]);
    }
}

struct Validator {
    unsigned n;
    void operator()(const TransverseField &) const {}
    void operator()(const XYRingGroups &spec) const { check_disjoint(spec.groups, n); }
    void operator()(const OrderedProduct &spec) const {
        for (const MixerTerm &t : spec.terms) {
            if (t.a >= n || (t.kind == MixerTerm::Kind::xy && t.b >= n)) {
                throw std::invalid_argument("mixer term references a qubit >= " + std::to_string(n));
            }
            if (t.kind == MixerTerm::Kind::xy && t.a == t.b) {
                throw std::invalid_argument("XY mixer term needs two distinct qubits");
            }
        }
    }
};

}  // namespace

void validate_mixer(const MixerSpec &spec, unsigned n) { std::visit(Validator{n}, spec); }

OrderedProduct as_ordered_product(const XYRingGroups &rings) {
    OrderedProduct out;
    for (const auto &group : rings.groups) {
        for_each_ring_pair(group, [&](unsigned i, unsigned j) { out.terms.push_back(MixerTerm::xy(i, j)); });
    }
    return out;
}

void apply_mixer(StateVector &state, const MixerSpec &spec, double beta) {
    validate_mixer(spec, state.qubits());
    if (std::holds_alternative<TransverseField>(spec)) {
        apply_rx_all(state, beta);
        return;
    }
    const OrderedProduct product = std::holds_alternative<XYRingGroups>(spec)
                                       ? as_ordered_product(std::get<XYRingGroups>(spec))
                                       : std::get<OrderedProduct>(spec);
    for (const MixerTerm &t : product.terms) {
        if (t.kind == MixerTerm::Kind::x) {
            apply_rx(state, t.a, beta);
        } else {
            apply_xy_pair(state, t.a, t.b, beta);
        }
    }
}

Predicate feasible_onehot_predicate(const std::vector<std::vector<unsigned>> &groups) {
    check_disjoint(groups, 64);
    std::vector<Bitstring> masks;
    for (const auto &group : groups) {
        Bitstring mask = 0;
        for (unsigned q : group) {
            mask |= Bitstring{1} << q;
        }
        masks.push_back(mask);
    }
    return [masks = std::move(masks)](Bitstring x) {
        for (Bitstring mask : masks) {
            if (std::popcount(x & mask) != 1) {
                return false;
            }
        }
        return true;
    };
}

}  // namespace aoas
