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

#include <cstddef>

#include "aoas/kernels.hpp"

namespace aoas::detail {

extern const KernelTable scalar_kernels;
#ifdef AOAS_HAVE_AVX2
extern const KernelTable avx2_kernels;
#endif

void xy_scalar(cplx *amps, std::size_t dim, unsigned a, unsigned b, double c, double s);

namespace {

/// Spreads the bits of k around two zero bits at positions lo < hi.
inline std::size_t insert_two_zero_bits(std::size_t k, unsigned lo, unsigned hi) {
    std::size_t low_mask = (std::size_t{1} << lo) - 1;
    k = ((k & ~low_mask) << 1) | (k & low_mask);
    std::size_t high_mask = (std::size_t{1} << hi) - 1;
    return ((k & ~high_mask) << 1) | (k & high_mask);
}

}  // namespace

}  // namespace aoas::detail
