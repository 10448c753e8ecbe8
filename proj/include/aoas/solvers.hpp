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
#include <optional>
#include <vector>

#include "aoas/pubo.hpp"
#include "aoas/statevector.hpp"

namespace aoas {

/// Packs an assignment into a bitstring, variable 0 in bit 0.
Bitstring to_bits(std::span<const std::uint8_t> x);
Assignment to_assignment(Bitstring bits, unsigned n_vars);

struct BruteForceResult {
    double energy = 0.0;
    /// Every minimizing assignment, packed with to_bits, ascending.
    std::vector<Bitstring> argmins;
};

/// Exact minimum by Gray-code enumeration of the first `enumerated`
/// variables (default: all). The remaining variables are split into blocks
/// (connected components of their couplings to each other); every block is
/// minimized exhaustively for each enumerated assignment, keeping all tied
/// block assignments. Throws SizeError when more than 26 variables are
/// enumerated, a block exceeds 12 variables or more than 64 exist.
BruteForceResult brute_force_minimize(const Qubo &q, std::optional<unsigned> enumerated = std::nullopt);

/// Sets each variable in `vars` to its optimal value given the rest of `x`.
/// The variables in `vars` must not couple to each other.
void minimize_uncoupled(const Qubo &q, Assignment &x, std::span<const unsigned> vars);

struct AnnealSchedule {
    /// Defaults to 10 * max |coefficient|.
    std::optional<double> t_start;
    double t_end = 0.01;
    unsigned sweeps = 1000;
};

struct AnnealResult {
    double energy = 0.0;
    Assignment state;
};

/// Single-spin-flip Metropolis. Each sweep makes n_vars moves on uniformly
/// chosen variables at temperature t_start * (t_end / t_start)^(k / sweeps)
/// for sweep k. Returns the best state seen.
AnnealResult simulated_annealing(const Qubo &q, const AnnealSchedule &schedule, std::uint64_t seed);

/// Best of `restarts` runs, run r seeded with Rng::mix(seed, r). Ties go to
/// the lowest r, so the result does not depend on `threads`.
AnnealResult anneal_restarts(const Qubo &q, const AnnealSchedule &schedule, std::uint64_t seed, unsigned restarts,
                             unsigned threads = 1);

}  // namespace aoas
