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

// Compiled with -mavx2 -mfma. Only reached through the dispatch table after a
// CPUID check, so nothing here may be inlined into other translation units.

#include <immintrin.h>

#include <cmath>

#include "kernels_internal.hpp"

namespace aoas::detail {
namespace {

// (re, im) -> (im, -re), i.e. multiplication by -i, for both packed values.
inline __m256d mul_neg_i(__m256d v) {
    const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    return _mm256_mul_pd(_mm256_permute_pd(v, 0b0101), sign);
}

inline double horizontal_sum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

// (v0, v0, v1, v1) from two consecutive doubles.
inline __m256d duplicate_pairs(const double *p) {
    __m256d v = _mm256_castpd128_pd256(_mm_loadu_pd(p));
    return _mm256_permute4x64_pd(v, _MM_SHUFFLE(1, 1, 0, 0));
}

void phase_avx2(cplx *amps, const double *values, std::size_t dim, double gamma) {
    double *d = reinterpret_cast<double *>(amps);
    for (std::size_t x = 0; x < dim; x += 2) {
        double t0 = -gamma * values[x];
        double t1 = -gamma * values[x + 1];
        double c0 = std::cos(t0), s0 = std::sin(t0);
        double c1 = std::cos(t1), s1 = std::sin(t1);
        __m256d v = _mm256_loadu_pd(d + 2 * x);
        __m256d cv = _mm256_setr_pd(c0, c0, c1, c1);
        __m256d sv = _mm256_setr_pd(-s0, s0, -s1, s1);
        __m256d swapped = _mm256_permute_pd(v, 0b0101);
        _mm256_storeu_pd(d + 2 * x, _mm256_fmadd_pd(v, cv, _mm256_mul_pd(swapped, sv)));
    }
}

void rx_avx2(cplx *amps, std::size_t dim, unsigned qubit, double c, double s) {
    double *d = reinterpret_cast<double *>(amps);
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sv = _mm256_set1_pd(s);
    if (qubit == 0) {
        // Both members of each pair share one register.
        for (std::size_t k = 0; k < dim; k += 2) {
            __m256d v = _mm256_loadu_pd(d + 2 * k);
            __m256d partner = _mm256_permute2f128_pd(v, v, 0x01);
            __m256d out = _mm256_fmadd_pd(cv, v, _mm256_mul_pd(sv, mul_neg_i(partner)));
            _mm256_storeu_pd(d + 2 * k, out);
        }
        return;
    }
    std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; k += 2) {
            double *p0 = d + 2 * k;
            double *p1 = d + 2 * (k + stride);
            __m256d v0 = _mm256_loadu_pd(p0);
            __m256d v1 = _mm256_loadu_pd(p1);
            __m256d o0 = _mm256_fmadd_pd(cv, v0, _mm256_mul_pd(sv, mul_neg_i(v1)));
            __m256d o1 = _mm256_fmadd_pd(cv, v1, _mm256_mul_pd(sv, mul_neg_i(v0)));
            _mm256_storeu_pd(p0, o0);
            _mm256_storeu_pd(p1, o1);
        }
    }
}

void xy_avx2(cplx *amps, std::size_t dim, unsigned a, unsigned b, double c, double s) {
    unsigned lo = a < b ? a : b;
    unsigned hi = a < b ? b : a;
    if (lo == 0 || dim < 8) {
        // Partners of neighbouring indices are not contiguous; no packed form.
        xy_scalar(amps, dim, a, b, c, s);
        return;
    }
    double *d = reinterpret_cast<double *>(amps);
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sv = _mm256_set1_pd(s);
    std::size_t bit_a = std::size_t{1} << a;
    std::size_t bit_b = std::size_t{1} << b;
    for (std::size_t k = 0; k < dim / 4; k += 2) {
        std::size_t base = insert_two_zero_bits(k, lo, hi);
        double *p0 = d + 2 * (base | bit_a);
        double *p1 = d + 2 * (base | bit_b);
        __m256d v0 = _mm256_loadu_pd(p0);
        __m256d v1 = _mm256_loadu_pd(p1);
        __m256d o0 = _mm256_fmadd_pd(cv, v0, _mm256_mul_pd(sv, mul_neg_i(v1)));
        __m256d o1 = _mm256_fmadd_pd(cv, v1, _mm256_mul_pd(sv, mul_neg_i(v0)));
        _mm256_storeu_pd(p0, o0);
        _mm256_storeu_pd(p1, o1);
    }
}

double expectation_avx2(const cplx *amps, const double *values, std::size_t dim) {
    const double *d = reinterpret_cast<const double *>(amps);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t x = 0;
    for (; x + 4 <= dim; x += 4) {
        __m256d v0 = _mm256_loadu_pd(d + 2 * x);
        __m256d v1 = _mm256_loadu_pd(d + 2 * x + 4);
        acc0 = _mm256_fmadd_pd(_mm256_mul_pd(v0, v0), duplicate_pairs(values + x), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_mul_pd(v1, v1), duplicate_pairs(values + x + 2), acc1);
    }
    for (; x < dim; x += 2) {
        __m256d v = _mm256_loadu_pd(d + 2 * x);
        acc0 = _mm256_fmadd_pd(_mm256_mul_pd(v, v), duplicate_pairs(values + x), acc0);
    }
    return horizontal_sum(_mm256_add_pd(acc0, acc1));
}

double norm_sq_avx2(const cplx *amps, std::size_t dim) {
    const double *d = reinterpret_cast<const double *>(amps);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t x = 0;
    for (; x + 4 <= dim; x += 4) {
        __m256d v0 = _mm256_loadu_pd(d + 2 * x);
        __m256d v1 = _mm256_loadu_pd(d + 2 * x + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; x < dim; x += 2) {
        __m256d v = _mm256_loadu_pd(d + 2 * x);
        acc0 = _mm256_fmadd_pd(v, v, acc0);
    }
    return horizontal_sum(_mm256_add_pd(acc0, acc1));
}

}  // namespace

const KernelTable avx2_kernels = {
    "avx2", &phase_avx2, &rx_avx2, &xy_avx2, &expectation_avx2, &norm_sq_avx2,
};

}  // namespace aoas::detail
