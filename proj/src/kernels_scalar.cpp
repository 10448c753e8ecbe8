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

#include <algorithm>
#include <cmath>

#include "kernels_internal.hpp"

namespace aoas::detail {
namespace {

void phase_scalar(cplx *amps, const double *values, std::size_t dim, double gamma) {
    double *d = reinterpret_cast<double *>(amps);
    for (std::size_t x = 0; x < dim; ++x) {
        double theta = -gamma * values[x];
        double c = std::cos(theta);
        double s = std::sin(theta);
        double re = d[2 * x];
        double im = d[2 * x + 1];
        d[2 * x] = re * c - im * s;
        d[2 * x + 1] = im * c + re * s;
    }
}

void rx_scalar(cplx *amps, std::size_t dim, unsigned qubit, double c, double s) {
    double *d = reinterpret_cast<double *>(amps);
    std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; ++k) {
            double *p0 = d + 2 * k;
            double *p1 = d + 2 * (k + stride);
            double r0 = p0[0], i0 = p0[1], r1 = p1[0], i1 = p1[1];
            // (c - i s X): -i s (r + i m) = s m - i s r
            p0[0] = c * r0 + s * i1;
            p0[1] = c * i0 - s * r1;
            p1[0] = c * r1 + s * i0;
            p1[1] = c * i1 - s * r0;
        }
    }
}

double expectation_scalar(const cplx *amps, const double *values, std::size_t dim) {
    double total = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
        total += std::norm(amps[x]) * values[x];
    }
    return total;
}

double norm_sq_scalar(const cplx *amps, std::size_t dim) {
    double total = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
        total += std::norm(amps[x]);
    }
    return total;
}

}  // namespace

void xy_scalar(cplx *amps, std::size_t dim, unsigned a, unsigned b, double c, double s) {
    double *d = reinterpret_cast<double *>(amps);
    unsigned lo = std::min(a, b);
    unsigned hi = std::max(a, b);
    std::size_t bit_a = std::size_t{1} << a;
    std::size_t bit_b = std::size_t{1} << b;
    for (std::size_t k = 0; k < dim / 4; ++k) {
        std::size_t base = insert_two_zero_bits(k, lo, hi);
        double *p0 = d + 2 * (base | bit_a);
        double *p1 = d + 2 * (base | bit_b);
        double r0 = p0[0], i0 = p0[1], r1 = p1[0], i1 = p1[1];
        p0[0] = c * r0 + s * i1;
        p0[1] = c * i0 - s * r1;
        p1[0] = c * r1 + s * i0;
        p1[1] = c * i1 - s * r0;
    }
}

const KernelTable scalar_kernels = {
    "scalar", &phase_scalar, &rx_scalar, &xy_scalar, &expectation_scalar, &norm_sq_scalar,
};

}  // namespace aoas::detail
