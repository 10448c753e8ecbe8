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
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace aoas {

/// Values of binary variables, one byte (0 or 1) per variable.
using Assignment = std::vector<std::uint8_t>;

/// Pseudo-Boolean polynomial of any degree. Keys are strictly increasing
/// variable tuples; the empty tuple holds the constant. Zero coefficients are
/// never stored.
class Pubo {
  public:
    explicit Pubo(unsigned n_vars) : n_(n_vars) {}

    unsigned variables() const { return n_; }
    const std::map<std::vector<unsigned>, double> &terms() const { return terms_; }

    /// Adds coef * prod(vars). Repeated variables collapse (x^2 = x).
    void add(std::vector<unsigned> vars, double coef);
    void add_constant(double coef) { add({}, coef); }
    /// weight * (sum_i c_i x_i + constant)^2, expanded with x_i^2 = x_i.
    void add_square(std::span<const std::pair<unsigned, double>> linear, double constant, double weight);

    double constant() const;
    unsigned degree() const;
    double evaluate(std::span<const std::uint8_t> x) const;

  private:
    unsigned n_;
    std::map<std::vector<unsigned>, double> terms_;
};

/// offset + sum_i linear[i] x_i + sum_{i<j} quadratic[(i,j)] x_i x_j.
struct Qubo {
    unsigned n = 0;
    double offset = 0.0;
    std::vector<double> linear;
    std::map<std::pair<unsigned, unsigned>, double> quadratic;

    explicit Qubo(unsigned n_vars = 0) : n(n_vars), linear(n_vars, 0.0) {}

    /// Throws unless every key has i < j < n and every coefficient is finite.
    void validate() const;
    double evaluate(std::span<const std::uint8_t> x) const;
    double max_abs_coefficient() const;

    /// Throws std::invalid_argument for degree > 2.
    static Qubo from_pubo(const Pubo &p);
    Pubo to_pubo() const;
};

/// Chooses the two variables of a cubic monomial that an ancilla replaces.
using PairRule = std::function<std::pair<unsigned, unsigned>(std::span<const unsigned> monomial)>;

/// Picks the two lowest-indexed variables.
std::pair<unsigned, unsigned> lowest_pair_rule(std::span<const unsigned> monomial);

struct Ancilla {
    unsigned a;
    unsigned b;
    unsigned index;
};

struct Quadratization {
    Qubo qubo;
    std::vector<Ancilla> ancillas;
};

/// Replaces the chosen pair (a, b) of each cubic monomial by an ancilla w,
/// shared by every monomial that selects the same pair, and adds
/// penalty * (a b - 2 a w - 2 b w + 3 w) once per ancilla. Ancillas are
/// numbered from p.variables() upward in order of first use. For every
/// assignment of the original variables, the minimum over ancillas equals
/// the original energy provided the penalty exceeds the total positive
/// coefficient multiplying each ancilla.
Quadratization quadratize(const Pubo &p, double penalty, const PairRule &pair_rule = lowest_pair_rule);

}  // namespace aoas
