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
#include <iosfwd>
#include <span>
#include <vector>

#include "aoas/kernels.hpp"

namespace aoas {

/// Computational basis index. Bit j is the value of qubit j (qubit 0 is the
/// least significant bit).
using Bitstring = std::uint64_t;

inline constexpr unsigned kMaxQubits = 26;

/// Throws SizeError unless 1 <= n <= kMaxQubits.
void check_qubit_count(unsigned n);

/// Dense vector of 2^n amplitudes. Normalized on construction; the unitary
/// operations below preserve the norm.
class StateVector {
  public:
    /// Uniform superposition, every amplitude 2^(-n/2).
    static StateVector uniform(unsigned n);
    /// Computational basis state |x>.
    static StateVector basis(unsigned n, Bitstring x);
    /// Takes ownership of explicit amplitudes. Throws unless the size is a
    /// power of two in range and the norm is 1 within 1e-10.
    static StateVector from_amplitudes(std::vector<cplx> amps);

    unsigned qubits() const { return n_; }
    std::size_t size() const { return amps_.size(); }
    const cplx &operator[](std::size_t i) const { return amps_[i]; }

    std::span<const cplx> amplitudes() const { return amps_; }
    std::span<cplx> amplitudes() { return amps_; }

    double norm() const;
    double probability(Bitstring x) const { return std::norm(amps_.at(x)); }

  private:
    StateVector(unsigned n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {}

    unsigned n_;
    std::vector<cplx> amps_;
};

/// Cost f(x) for every basis state; the phase separator is exp(-i gamma f).
class DiagonalCost {
  public:
    DiagonalCost(unsigned n, std::vector<double> values);

    /// Tabulates f over all 2^n bitstrings.
    static DiagonalCost from_function(unsigned n, const std::function<double(Bitstring)> &f);

    unsigned qubits() const { return n_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }

    double min() const;
    double max() const;
    double mean() const;
    bool is_constant() const { return min() == max(); }

  private:
    unsigned n_;
    std::vector<double> values_;
};

using Predicate = std::function<bool(Bitstring)>;

/// Equal superposition of the basis states accepted by the predicate.
/// Throws std::invalid_argument when none is accepted.
StateVector uniform_over(unsigned n, const Predicate &accept);

/// amp[x] *= exp(-i gamma f(x)).
void apply_diagonal_phase(StateVector &state, const DiagonalCost &cost, double gamma);

/// exp(-i beta sum_j X_j), applied as a product of single-qubit rotations.
void apply_rx_all(StateVector &state, double beta);

/// exp(-i beta X_q) on one qubit.
void apply_rx(StateVector &state, unsigned qubit, double beta);

/// exp(-i beta (X_i X_j + Y_i Y_j) / 2). In the {|01>, |10>} block of qubits
/// (i, j) this is [[cos b, -i sin b], [-i sin b, cos b]]; |00> and |11> are
/// left alone, so beta = pi/2 transfers the population completely.
void apply_xy_pair(StateVector &state, unsigned i, unsigned j, double beta);

double expectation_diagonal(const StateVector &state, const DiagonalCost &cost);

/// Total probability of the basis states accepted by the predicate.
double subspace_probability(const StateVector &state, const Predicate &predicate);

/// |<a|b>|, used to compare states up to a global phase.
double overlap_magnitude(const StateVector &a, const StateVector &b);

// Binary dump: "AOAS", u32 version, u32 n, then 2^(n+1) little-endian
// float64 values (re, im interleaved, index order).
inline constexpr std::uint32_t kStateDumpVersion = 1;
void write_state(std::ostream &out, const StateVector &state);
StateVector read_state(std::istream &in);

}  // namespace aoas
