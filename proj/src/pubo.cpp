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

#include "aoas/pubo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aoas {

void Pubo::add(std::vector<unsigned> vars, double coef) {
    if (!std::isfinite(coef)) {
        throw std::invalid_argument("polynomial coefficients must be finite");
    }
    for (unsigned v : vars) {
        if (v >= n_) {
            throw std::out_of_range("variable " + std::to_string(v) + " out of range");
        }
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    auto [it, inserted] = terms_.try_emplace(std::move(vars), coef);
    if (!inserted) {
        it->second += coef;
    }
    if (it->second == 0.0) {
        terms_.erase(it);
    }
}

void Pubo::add_square(std::span<const std::pair<unsigned, double>> linear, double constant, double weight) {
    // Merge repeated variables first so the expansion stays exact.
    std::map<unsigned, double> merged;
    for (auto [v, c] : linear) {
        merged[v] += c;
    }
    std::vector<std::pair<unsigned, double>> items(merged.begin(), merged.end());
    add_constant(weight * constant * constant);
    for (std::size_t i = 0; i < items.size(); ++i) {
        auto [vi, ci] = items[i];
        add({vi}, weight * (ci * ci + 2.0 * constant * ci));
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            add({vi, items[j].first}, weight * 2.0 * ci * items[j].second);
        }
    }
}

double Pubo::constant() const {
    auto it = terms_.find({});
    return it == terms_.end() ? 0.0 : it->second;
}

unsigned Pubo::degree() const {
    unsigned d = 0;
    for (const auto &[vars, coef] : terms_) {
        d = std::max<unsigned>(d, static_cast<unsigned>(vars.size()));
    }
    return d;
}

double Pubo::evaluate(std::span<const std::uint8_t> x) const {
    if (x.size() != n_) {
        throw std::invalid_argument("assignment has " + std::to_string(x.size()) + " values, expected " +
                                    std::to_string(n_));
    }
    double total = 0.0;
    for (const auto &[vars, coef] : terms_) {
        bool on = std::all_of(vars.begin(), vars.end(), [&](unsigned v) { return x[v] != 0; });
        if (on) {
            total += coef;
        }
    }
    return total;
}

void Qubo::validate() const {
    if (linear.size() != n) {
        throw std::invalid_argument("QUBO linear vector has the wrong length");
    }
    if (!std::isfinite(offset) || !std::all_of(linear.begin(), linear.end(), [](double c) { return std::isfinite(c); })) {
        throw std::invalid_argument("QUBO coefficients must be finite");
    }
    for (const auto &[key, coef] : quadratic) {
        if (!(key.first < key.second && key.second < n)) {
            throw std::invalid_argument("QUBO coupling (" + std::to_string(key.first) + "," +
                                        std::to_string(key.second) + ") must satisfy i < j < n");
        }
        if (!std::isfinite(coef)) {
            throw std::invalid_argument("QUBO coefficients must be finite");
        }
    }
}

double Qubo::evaluate(std::span<const std::uint8_t> x) const {
    if (x.size() != n) {
        throw std::invalid_argument("assignment has " + std::to_string(x.size()) + " values, expected " +
                                    std::to_string(n));
    }
    double total = offset;
    for (unsigned i = 0; i < n; ++i) {
        if (x[i]) total += linear[i];
    }
    for (const auto &[key, coef] : quadratic) {
        if (x[key.first] && x[key.second]) total += coef;
    }
    return total;
}

double Qubo::max_abs_coefficient() const {
    double m = 0.0;
    for (double c : linear) m = std::max(m, std::abs(c));
    for (const auto &[key, coef] : quadratic) m = std::max(m, std::abs(coef));
    return m;
}

Qubo Qubo::from_pubo(const Pubo &p) {
    Qubo q(p.variables());
    for (const auto &[vars, coef] : p.terms()) {
        switch (vars.size()) {
            case 0:
                q.offset += coef;
                break;
            case 1:
                q.linear[vars[0]] += coef;
                break;
            case 2:
                q.quadratic[{vars[0], vars[1]}] += coef;
                break;
            default:
                throw std::invalid_argument("polynomial has degree " + std::to_string(vars.size()) +
                                            "; quadratize it first");
        }
    }
    return q;
}

Pubo Qubo::to_pubo() const {
    Pubo p(n);
    p.add_constant(offset);
    for (unsigned i = 0; i < n; ++i) {
        p.add({i}, linear[i]);
    }
    for (const auto &[key, coef] : quadratic) {
        p.add({key.first, key.second}, coef);
    }
    return p;
}

std::pair<unsigned, unsigned> lowest_pair_rule(std::span<const unsigned> monomial) {
    return {monomial[0], monomial[1]};
}

Quadratization quadratize(const Pubo &p, double penalty, const PairRule &pair_rule) {
    if (p.degree() > 3) {
        throw std::invalid_argument("quadratize supports degree <= 3, got " + std::to_string(p.degree()));
    }
    if (!(penalty > 0.0)) {
        throw std::invalid_argument("quadratization penalty must be positive");
    }
    std::map<std::pair<unsigned, unsigned>, unsigned> ancilla_of;
    std::vector<Ancilla> ancillas;
    std::vector<std::pair<std::vector<unsigned>, double>> rewritten;

    for (const auto &[vars, coef] : p.terms()) {
        if (vars.size() < 3) {
            rewritten.emplace_back(vars, coef);
            continue;
        }
        auto [a, b] = pair_rule(vars);
        if (a > b) std::swap(a, b);
        auto count_a = std::count(vars.begin(), vars.end(), a);
        auto count_b = std::count(vars.begin(), vars.end(), b);
        if (a == b || count_a != 1 || count_b != 1) {
            throw std::logic_error("pair rule returned variables that are not two members of the monomial");
        }
        unsigned rest = 0;
        for (unsigned v : vars) {
            if (v != a && v != b) rest = v;
        }
        auto [it, inserted] = ancilla_of.try_emplace({a, b}, p.variables() + static_cast<unsigned>(ancillas.size()));
        if (inserted) {
            ancillas.push_back({a, b, it->second});
        }
        rewritten.push_back({{std::min(rest, it->second), std::max(rest, it->second)}, coef});
    }

    Pubo out(p.variables() + static_cast<unsigned>(ancillas.size()));
    for (auto &[vars, coef] : rewritten) {
        out.add(vars, coef);
    }
    for (const Ancilla &anc : ancillas) {
        out.add({anc.a, anc.b}, penalty);
        out.add({anc.a, anc.index}, -2.0 * penalty);
        out.add({anc.b, anc.index}, -2.0 * penalty);
        out.add({anc.index}, 3.0 * penalty);
    }
    return {Qubo::from_pubo(out), std::move(ancillas)};
}

}  // namespace aoas
