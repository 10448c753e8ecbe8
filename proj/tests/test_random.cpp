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

#include <random>

#include "aoas/random.hpp"

using aoas::Rng;

TEST(random, engine_is_standard_mt19937_64) {
    std::mt19937_64 reference;
    reference.discard(9999);
    EXPECT_EQ(reference(), 9981545732273789042ULL);

    Rng rng(5489);
    for (int i = 0; i < 9999; ++i) rng.next();
    EXPECT_EQ(rng.next(), 9981545732273789042ULL);
}

TEST(random, uniform_vectors) {
    // Computed with an independent Python MT19937-64.
    Rng rng(42);
    EXPECT_EQ(rng.uniform(), 0.755155532954539);
    EXPECT_EQ(rng.uniform(), 0.6390313938546974);
    EXPECT_EQ(rng.uniform(), 0.7521452007480266);
}

TEST(random, below_vectors) {
    Rng rng(42);
    const std::uint64_t expected[] = {6, 4, 0, 2, 1, 8, 6, 4};
    for (std::uint64_t e : expected) EXPECT_EQ(rng.below(10), e);
}

TEST(random, mix_is_splitmix64) {
    EXPECT_EQ(Rng::mix(0, 0), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(Rng::mix(0, 1), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(Rng::mix(0, 2), 0x06c45d188009454fULL);
    EXPECT_EQ(Rng::mix(1234567, 0), 6457827717110365317ULL);
    EXPECT_EQ(Rng::mix(1234567, 1), 3203168211198807973ULL);
    EXPECT_EQ(Rng::mix(1234567, 2), 9817491932198370423ULL);
}

TEST(random, uniform_range_and_streams) {
    Rng a = Rng::stream(7, 3), b = Rng::stream(7, 3), c = Rng::stream(7, 4);
    double first_c = c.uniform(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        double x = a.uniform(-2.0, 3.0);
        EXPECT_EQ(x, b.uniform(-2.0, 3.0));
        EXPECT_GE(x, -2.0);
        EXPECT_LT(x, 3.0);
    }
    EXPECT_NE(first_c, Rng::stream(7, 3).uniform(-1.0, 1.0));
}
