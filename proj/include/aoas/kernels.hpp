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

#include <complex>
#include <cstddef>
#include <cstdint>

namespace aoas {

using cplx = std::complex<double>;

/// Function table for the state-vector inner loops. Every table computes the
/// same maps; tables differ only in instruction set and in the order of
/// floating point reductions.
struct KernelTable {
    const char *name;

    /// amps[x] *= exp(-i * gamma * values[x]).
    void (*phase)(cplx *amps, const double *values, std::size_t dim, double gamma);

    /// exp(-i theta X_q), given c = cos(theta), s = sin(theta).
    void (*rx)(cplx *amps, std::size_t dim, unsigned qubit, double c, double s);

    /// exp(-i theta (X_a X_b + Y_a Y_b) / 2); rotates the |01>,|10> pair of
    /// qubits (a, b) and leaves |00>, |11> untouched.
    void (*xy)(cplx *amps, std::size_t dim, unsigned a, unsigned b, double c, double s);

    /// sum_x |amps[x]|^2 * values[x].
    double (*expectation)(const cplx *amps, const double *values, std::size_t dim);

    /// sum_x |amps[x]|^2.
    double (*norm_sq)(const cplx *amps, std::size_t dim);
};

enum class Isa { scalar, avx2 };

/// Table for the given instruction set, or nullptr when it was not compiled in
/// or the running CPU does not support it.
const KernelTable *find_kernels(Isa isa);

/// Table used by the library. Chosen once on first use: the AOAS_KERNELS
/// environment variable ("scalar" or "avx2") overrides, otherwise the widest
/// supported table wins.
const KernelTable &active_kernels();

}  // namespace aoas
