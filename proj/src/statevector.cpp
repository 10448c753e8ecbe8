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

#include "aoas/statevector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "aoas/error.hpp"

namespace aoas {

void check_qubit_count(unsigned n) {
    if (n < 1 || n > kMaxQubits) {
        throw SizeError("qubit count " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
    }
}

StateVector StateVector::uniform(unsigned n) {
    check_qubit_count(n);
    std::size_t dim = std::size_t{1} << n;
    double amp = std::pow(2.0, -0.5 * n);
    return StateVector(n, std::vector<cplx>(dim, cplx(amp, 0.0)));
}

StateVector StateVector::basis(unsigned n, Bitstring x) {
    check_qubit_count(n);
    std::size_t dim = std::size_t{1} << n;
    if (x >= dim) {
        throw std::out_of_range("basis index " + std::to_string(x) + " out of range for " +
                                std::to_string(n) + " qubits");
    }
    std::vector<cplx> amps(dim);
    amps[x] = 1.0;
    return StateVector(n, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw SizeError("amplitude count must be a power of two >= 2");
    }
    unsigned n = static_cast<unsigned>(std::countr_zero(amps.size()));
    check_qubit_count(n);
    double norm = std::sqrt(active_kernels().norm_sq(amps.data(), amps.size()));
    if (!(std::abs(norm - 1.0) < 1e-10)) {
        throw std::invalid_argument("amplitudes are not normalized (norm " + std::to_string(norm) +
                                    ")");
    }
    return StateVector(n, std::move(amps));
}

StateVector uniform_over(unsigned n, const Predicate &accept) {
    check_qubit_count(n);
    std::vector<cplx> amps(std::size_t{1} << n);
    std::size_t count = 0;
    for (Bitstring x = 0; x < amps.size(); ++x) {
        if (accept(x)) {
            amps[x] = 1.0;
            ++count;
        }
    }
    if (count == 0) {
        throw std::invalid_argument("no basis state satisfies the predicate");
    }
    const double a = 1.0 / std::sqrt(static_cast<double>(count));
    for (cplx &v : amps) v *= a;
    return StateVector::from_amplitudes(std::move(amps));
}

double StateVector::norm() const {
    return std::sqrt(active_kernels().norm_sq(amps_.data(), amps_.size()));
}

DiagonalCost::DiagonalCost(unsigned n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    check_qubit_count(n);
    if (values_.size() != (std::size_t{1} << n)) {
        throw DimensionError("cost table has " + std::to_string(values_.size()) +
                             " entries, expected 2^" + std::to_string(n));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("cost table entries must be finite");
        }
    }
}

DiagonalCost DiagonalCost::from_function(unsigned n, const std::function<double(Bitstring)> &f) {
    check_qubit_count(n);
    std::vector<double> values(std::size_t{1} << n);
    for (std::size_t x = 0; x < values.size(); ++x) {
        values[x] = f(x);
    }
    return DiagonalCost(n, std::move(values));
}

double DiagonalCost::min() const { return *std::min_element(values_.begin(), values_.end()); }

double DiagonalCost::max() const { return *std::max_element(values_.begin(), values_.end()); }

double DiagonalCost::mean() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

namespace {

void require_same_size(const StateVector &state, const DiagonalCost &cost) {
    if (state.qubits() != cost.qubits()) {
        throw DimensionError("state has " + std::to_string(state.qubits()) +
                             " qubits but cost table has " + std::to_string(cost.qubits()));
    }
}

void require_qubit(const StateVector &state, unsigned q) {
    if (q >= state.qubits()) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                                std::to_string(state.qubits()) + " qubits");
    }
}

}  // namespace

void apply_diagonal_phase(StateVector &state, const DiagonalCost &cost, double gamma) {
    require_same_size(state, cost);
    auto amps = state.amplitudes();
    active_kernels().phase(amps.data(), cost.values().data(), amps.size(), gamma);
}

void apply_rx(StateVector &state, unsigned qubit, double beta) {
    require_qubit(state, qubit);
    auto amps = state.amplitudes();
    active_kernels().rx(amps.data(), amps.size(), qubit, std::cos(beta), std::sin(beta));
}

void apply_rx_all(StateVector &state, double beta) {
    const KernelTable &k = active_kernels();
    double c = std::cos(beta);
    double s = std::sin(beta);
    auto amps = state.amplitudes();
    for (unsigned q = 0; q < state.qubits(); ++q) {
        k.rx(amps.data(), amps.size(), q, c, s);
    }
}

void apply_xy_pair(StateVector &state, unsigned i, unsigned j, double beta) {
    require_qubit(state, i);
    require_qubit(state, j);
    if (i == j) {
        throw std::invalid_argument("XY pair needs two distinct qubits");
    }
    auto amps = state.amplitudes();
    active_kernels().xy(amps.data(), amps.size(), i, j, std::cos(beta), std::sin(beta));
}

double expectation_diagonal(const StateVector &state, const DiagonalCost &cost) {
    require_same_size(state, cost);
    auto amps = state.amplitudes();
    return active_kernels().expectation(amps.data(), cost.values().data(), amps.size());
}

double subspace_probability(const StateVector &state, const Predicate &predicate) {
    double total = 0.0;
    for (std::size_t x = 0; x < state.size(); ++x) {
        if (predicate(x)) {
            total += std::norm(state[x]);
        }
    }
    return std::clamp(total, 0.0, 1.0);
}

double overlap_magnitude(const StateVector &a, const StateVector &b) {
    if (a.qubits() != b.qubits()) {
        throw DimensionError("overlap of states with different qubit counts");
    }
    cplx total = 0.0;
    for (std::size_t x = 0; x < a.size(); ++x) {
        total += std::conj(a[x]) * b[x];
    }
    return std::abs(total);
}

namespace {

constexpr char kMagic[4] = {'A', 'O', 'A', 'S'};

template <typename T>
void put_le(std::ostream &out, T value) {
    auto bits = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bits.begin(), bits.end());
    }
    out.write(reinterpret_cast<const char *>(bits.data()), bits.size());
}

template <typename T>
T get_le(std::istream &in) {
    std::array<unsigned char, sizeof(T)> bits;
    if (!in.read(reinterpret_cast<char *>(bits.data()), bits.size())) {
        throw std::runtime_error("state dump truncated");
    }
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bits.begin(), bits.end());
    }
    return std::bit_cast<T>(bits);
}

}  // namespace

void write_state(std::ostream &out, const StateVector &state) {
    out.write(kMagic, 4);
    put_le<std::uint32_t>(out, kStateDumpVersion);
    put_le<std::uint32_t>(out, state.qubits());
    for (const cplx &a : state.amplitudes()) {
        put_le<double>(out, a.real());
        put_le<double>(out, a.imag());
    }
}

StateVector read_state(std::istream &in) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
        throw std::runtime_error("not an AOAS state dump");
    }
    auto version = get_le<std::uint32_t>(in);
    if (version != kStateDumpVersion) {
        throw std::runtime_error("unsupported state dump version " + std::to_string(version));
    }
    auto n = get_le<std::uint32_t>(in);
    check_qubit_count(n);
    std::vector<cplx> amps(std::size_t{1} << n);
    for (cplx &a : amps) {
        double re = get_le<double>(in);
        double im = get_le<double>(in);
        a = cplx(re, im);
    }
    return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace aoas
