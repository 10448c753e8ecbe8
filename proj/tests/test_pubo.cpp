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

#include "gtest/gtest.h"

#include <algorithm>

#include "aoas/pubo.hpp"
#include "aoas/random.hpp"
#include "oracles/enumerate.hpp"

using namespace aoas;

namespace {

Assignment bits_of(std::uint64_t b, unsigned n) {
    Assignment x(n);
    for (unsigned i = 0; i < n; ++i) x[i] = (b >> i) & 1;
    return x;
}

}  // namespace

TEST(pubo, add_normalizes_terms) {
    Pubo p(4);
    p.add({2, 0, 2}, 1.5);
    p.add({0, 2}, -0.5);
    p.add({3, 1}, 2.0);
    p.add({1, 3}, -2.0);
    ASSERT_EQ(p.terms().size(), 1u);
    EXPECT_EQ(p.terms().begin()->first, (std::vector<unsigned>{0, 2}));
    EXPECT_EQ(p.terms().begin()->second, 1.0);
    EXPECT_THROW(p.add({4}, 1.0), std::out_of_range);
    EXPECT_THROW(p.add({0}, NAN), std::invalid_argument);
}

TEST(pubo, add_square_expands) {
    Pubo p(3);
    std::vector<std::pair<unsigned, double>> lin{{0, 1.0}, {1, 2.0}, {2, -1.0}};
    p.add_square(lin, -1.0, 3.0);
    for (std::uint64_t b = 0; b < 8; ++b) {
        double s = (b & 1) + 2.0 * ((b >> 1) & 1) - ((b >> 2) & 1) - 1.0;
        EXPECT_DOUBLE_EQ(oracle::pubo_energy(p, b), 3.0 * s * s);
        EXPECT_DOUBLE_EQ(p.evaluate(bits_of(b, 3)), 3.0 * s * s);
    }
    EXPECT_EQ(p.degree(), 2u);
}

TEST(pubo, qubo_conversions) {
    Pubo p(3);
    p.add({}, 1.0);
    p.add({0}, -2.0);
    p.add({0, 2}, 4.0);
    Qubo q = Qubo::from_pubo(p);
    EXPECT_EQ(q.offset, 1.0);
    EXPECT_EQ(q.linear, (std::vector<double>{-2.0, 0.0, 0.0}));
    EXPECT_EQ(q.quadratic.at({0, 2}), 4.0);
    EXPECT_EQ(q.to_pubo().terms(), p.terms());
    p.add({0, 1, 2}, 1.0);
    EXPECT_THROW(Qubo::from_pubo(p), std::invalid_argument);
}

TEST(pubo, qubo_validation) {
    Qubo q(2);
    q.quadratic[{1, 0}] = 1.0;
    EXPECT_THROW(q.validate(), std::invalid_argument);
    Qubo r(2);
    r.quadratic[{0, 2}] = 1.0;
    EXPECT_THROW(r.validate(), std::invalid_argument);
    Qubo s(2);
    s.linear[1] = INFINITY;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    Qubo t(3);
    t.linear = {1, -4, 2};
    t.quadratic[{0, 1}] = -3;
    EXPECT_EQ(t.max_abs_coefficient(), 4.0);
}

TEST(pubo, quadratize_leaves_quadratic_input_alone) {
    Pubo p(3);
    p.add({0, 1}, 2.0);
    p.add({2}, -1.0);
    Quadratization r = quadratize(p, 5.0);
    EXPECT_TRUE(r.ancillas.empty());
    EXPECT_EQ(r.qubo.n, 3u);
    EXPECT_EQ(r.qubo.to_pubo().terms(), p.terms());
}

TEST(pubo, quadratize_single_cubic_truth_table) {
    Pubo p(3);
    p.add({0, 1, 2}, 5.0);
    Quadratization r = quadratize(p, 10.0);
    ASSERT_EQ(r.ancillas.size(), 1u);
    EXPECT_EQ(r.ancillas[0].a, 0u);
    EXPECT_EQ(r.ancillas[0].b, 1u);
    EXPECT_EQ(r.ancillas[0].index, 3u);
    for (std::uint64_t b = 0; b < 8; ++b) {
        double with0 = oracle::qubo_energy(r.qubo, b);
        double with1 = oracle::qubo_energy(r.qubo, b | 8);
        EXPECT_DOUBLE_EQ(std::min(with0, with1), oracle::pubo_energy(p, b)) << b;
    }
}

TEST(pubo, quadratize_shares_ancillas_and_uses_rule) {
    Pubo p(4);
    p.add({0, 1, 2}, 1.0);
    p.add({0, 1, 3}, -2.0);
    p.add({1, 2, 3}, 3.0);
    auto rule = [](std::span<const unsigned> m) { return std::pair{m[1], m[2]}; };
    Quadratization r = quadratize(p, 20.0, rule);
    ASSERT_EQ(r.ancillas.size(), 3u);
    EXPECT_EQ(r.ancillas[0].a, 1u);
    EXPECT_EQ(r.ancillas[0].b, 2u);
    for (std::uint64_t b = 0; b < 16; ++b) {
        double best = 1e300;
        for (std::uint64_t w = 0; w < 8; ++w) best = std::min(best, oracle::qubo_energy(r.qubo, b | (w << 4)));
        EXPECT_NEAR(best, oracle::pubo_energy(p, b), 1e-12);
    }

    Quadratization shared = quadratize(p, 20.0);
    EXPECT_EQ(shared.ancillas.size(), 2u);  // (0,1) twice, (1,2) once
}

TEST(pubo, quadratize_errors) {
    Pubo p(4);
    p.add({0, 1, 2, 3}, 1.0);
    EXPECT_THROW(quadratize(p, 1.0), std::invalid_argument);
    Pubo c(3);
    c.add({0, 1, 2}, 1.0);
    EXPECT_THROW(quadratize(c, 0.0), std::invalid_argument);
}
