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

#include "aoas/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "aoas/error.hpp"
#include "aoas/parallel.hpp"
#include "aoas/random.hpp"

namespace aoas {

namespace {

using Neighbors = std::vector<std::vector<std::pair<unsigned, double>>>;

Neighbors couplings(const Qubo &q) {
    Neighbors adj(q.n);
    for (const auto &[key, c] : q.quadratic) {
        adj[key.first].emplace_back(key.second, c);
        adj[key.second].emplace_back(key.first, c);
    }
    return adj;
}

double coefficient_scale(const Qubo &q) {
    double s = std::abs(q.offset);
    for (double c : q.linear) s += std::abs(c);
    for (const auto &[key, c] : q.quadratic) s += std::abs(c);
    return std::max(1.0, s);
}

}  // namespace

Bitstring to_bits(std::span<const std::uint8_t> x) {
    if (x.size() > 64) {
        throw SizeError("assignment of " + std::to_string(x.size()) + " variables does not fit a bitstring");
    }
    Bitstring bits = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) bits |= Bitstring{1} << i;
    }
    return bits;
}

Assignment to_assignment(Bitstring bits, unsigned n_vars) {
    if (n_vars > 64) {
        throw SizeError("bitstrings hold at most 64 variables");
    }
    Assignment x(n_vars);
    for (unsigned i = 0; i < n_vars; ++i) {
        x[i] = static_cast<std::uint8_t>((bits >> i) & 1);
    }
    return x;
}

void minimize_uncoupled(const Qubo &q, Assignment &x, std::span<const unsigned> vars) {
    if (x.size() != q.n) {
        throw DimensionError("assignment length does not match the Qubo");
    }
    std::vector<std::uint8_t> is_free(q.n, 0);
    for (unsigned v : vars) {
        if (v >= q.n) throw DimensionError("variable index out of range");
        is_free[v] = 1;
    }
    std::vector<double> field(q.n, 0.0);
    for (unsigned v : vars) field[v] = q.linear[v];
    for (const auto &[key, c] : q.quadratic) {
        auto [i, j] = key;
        if (is_free[i] && is_free[j]) {
            throw std::invalid_argument("variables " + std::to_string(i) + " and " + std::to_string(j) +
                                        " are coupled");
        }
        if (is_free[i] && x[j]) field[i] += c;
        if (is_free[j] && x[i]) field[j] += c;
    }
    for (unsigned v : vars) x[v] = field[v] < 0.0 ? 1 : 0;
}

namespace {

constexpr unsigned kMaxBlock = 12;

/// Variables above the enumerated range that couple to each other.
struct Block {
    std::vector<unsigned> vars;
    /// internal[a * size + b] for a < b.
    std::vector<double> internal;

    /// Energy of block assignment `s` given the external fields.
    double energy(std::uint32_t s, const std::vector<double> &g) const {
        const std::size_t m = vars.size();
        double e = 0.0;
        for (std::size_t a = 0; a < m; ++a) {
            if (!((s >> a) & 1)) continue;
            e += g[vars[a]];
            for (std::size_t b = a + 1; b < m; ++b) {
                if ((s >> b) & 1) e += internal[a * m + b];
            }
        }
        return e;
    }

    double minimum(const std::vector<double> &g) const {
        double best = 0.0;
        for (std::uint32_t s = 1; s < (1u << vars.size()); ++s) best = std::min(best, energy(s, g));
        return best;
    }
};

std::vector<Block> split_blocks(const Qubo &q, unsigned k, const Neighbors &adj) {
    const unsigned n = q.n;
    std::vector<int> block_of(n, -1);
    std::vector<Block> blocks;
    for (unsigned start = k; start < n; ++start) {
        if (block_of[start] >= 0) continue;
        Block block;
        std::vector<unsigned> stack{start};
        block_of[start] = static_cast<int>(blocks.size());
        while (!stack.empty()) {
            unsigned v = stack.back();
            stack.pop_back();
            block.vars.push_back(v);
            for (auto [j, c] : adj[v]) {
                if (j >= k && block_of[j] < 0) {
                    block_of[j] = static_cast<int>(blocks.size());
                    stack.push_back(j);
                }
            }
        }
        if (block.vars.size() > kMaxBlock) {
            throw SizeError("a block of " + std::to_string(block.vars.size()) +
                            " coupled non-enumerated variables exceeds the limit of " + std::to_string(kMaxBlock));
        }
        std::sort(block.vars.begin(), block.vars.end());
        const std::size_t m = block.vars.size();
        block.internal.assign(m * m, 0.0);
        for (std::size_t a = 0; a < m; ++a) {
            for (auto [j, c] : adj[block.vars[a]]) {
                auto it = std::find(block.vars.begin(), block.vars.end(), j);
                if (it != block.vars.end()) {
                    std::size_t b = static_cast<std::size_t>(it - block.vars.begin());
                    if (a < b) block.internal[a * m + b] = c;
                }
            }
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace

BruteForceResult brute_force_minimize(const Qubo &q, std::optional<unsigned> enumerated) {
    q.validate();
    const unsigned n = q.n;
    const unsigned k = enumerated.value_or(n);
    if (n > 64) {
        throw SizeError("brute force supports at most 64 variables, got " + std::to_string(n));
    }
    if (k > n) {
        throw std::invalid_argument("cannot enumerate more variables than the Qubo has");
    }
    if (k > kMaxQubits) {
        throw SizeError("brute force enumerates at most " + std::to_string(kMaxQubits) + " variables, got " +
                        std::to_string(k));
    }

    const Neighbors adj = couplings(q);
    const std::vector<Block> blocks = split_blocks(q, k, adj);
    std::vector<unsigned> block_index(n, 0);
    for (unsigned b = 0; b < blocks.size(); ++b) {
        for (unsigned v : blocks[b].vars) block_index[v] = b;
    }
    const double tol = 1e-9 * coefficient_scale(q);

    // f[i]: field of enumerated variable i from enumerated neighbours.
    // g[w]: field of a block variable from enumerated neighbours.
    std::vector<double> f(k), g(n, 0.0);
    for (unsigned i = 0; i < k; ++i) f[i] = q.linear[i];
    for (unsigned w = k; w < n; ++w) g[w] = q.linear[w];
    std::vector<double> block_min(blocks.size());
    double block_part = 0.0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        block_min[b] = blocks[b].minimum(g);
        block_part += block_min[b];
    }

    Bitstring state = 0;
    double enum_part = q.offset;
    double best = enum_part + block_part;
    std::vector<std::pair<double, Bitstring>> candidates{{best, state}};
    std::size_t prune_at = 1024;
    std::vector<unsigned> touched;
    const std::uint64_t count = std::uint64_t{1} << k;

    for (std::uint64_t s = 1; s < count; ++s) {
        const unsigned i = static_cast<unsigned>(std::countr_zero(s));
        const bool on = !((state >> i) & 1);
        state ^= Bitstring{1} << i;
        enum_part += on ? f[i] : -f[i];
        const double sign = on ? 1.0 : -1.0;
        touched.clear();
        for (auto [j, c] : adj[i]) {
            if (j < k) {
                f[j] += sign * c;
            } else {
                g[j] += sign * c;
                touched.push_back(block_index[j]);
            }
        }
        if (!touched.empty()) {
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (unsigned b : touched) {
                block_part -= block_min[b];
                block_min[b] = blocks[b].minimum(g);
                block_part += block_min[b];
            }
        }
        const double e = enum_part + block_part;
        if (e <= best + tol) {
            best = std::min(best, e);
            candidates.emplace_back(e, state);
            if (candidates.size() >= prune_at) {
                std::erase_if(candidates, [&](const auto &c) { return c.first > best + tol; });
                prune_at = std::max<std::size_t>(1024, 2 * candidates.size());
            }
        }
    }
    std::erase_if(candidates, [&](const auto &c) { return c.first > best + tol; });

    // Exact re-evaluation over every tied block assignment.
    std::vector<std::pair<double, Bitstring>> exact;
    for (const auto &[approx, bits] : candidates) {
        std::vector<double> field(n, 0.0);
        for (unsigned w = k; w < n; ++w) {
            field[w] = q.linear[w];
            for (auto [j, c] : adj[w]) {
                if (j < k && ((bits >> j) & 1)) field[w] += c;
            }
        }
        std::vector<Bitstring> partial{bits};
        for (const Block &block : blocks) {
            const double lowest = block.minimum(field);
            std::vector<Bitstring> next;
            for (std::uint32_t s = 0; s < (1u << block.vars.size()); ++s) {
                if (block.energy(s, field) > lowest + tol) continue;
                Bitstring mask = 0;
                for (std::size_t a = 0; a < block.vars.size(); ++a) {
                    if ((s >> a) & 1) mask |= Bitstring{1} << block.vars[a];
                }
                for (Bitstring p : partial) next.push_back(p | mask);
            }
            if (next.size() > (std::size_t{1} << 20)) {
                throw SizeError("too many tied block assignments to list every minimizer");
            }
            partial = std::move(next);
        }
        for (Bitstring full : partial) {
            exact.emplace_back(q.evaluate(to_assignment(full, n)), full);
        }
    }
    BruteForceResult out;
    out.energy = std::min_element(exact.begin(), exact.end())->first;
    for (const auto &[e, b] : exact) {
        if (e <= out.energy + tol) out.argmins.push_back(b);
    }
    std::sort(out.argmins.begin(), out.argmins.end());
    out.argmins.erase(std::unique(out.argmins.begin(), out.argmins.end()), out.argmins.end());
    return out;
}

AnnealResult simulated_annealing(const Qubo &q, const AnnealSchedule &schedule, std::uint64_t seed) {
    q.validate();
    const unsigned n = q.n;
    const double t_end = schedule.t_end;
    const double t_start = schedule.t_start.value_or(std::max(10.0 * q.max_abs_coefficient(), t_end));
    if (schedule.sweeps < 1) {
        throw std::invalid_argument("annealing needs at least one sweep");
    }
    if (!(t_end > 0.0) || !(t_start >= t_end) || !std::isfinite(t_start)) {
        throw std::invalid_argument("annealing temperatures must satisfy t_start >= t_end > 0");
    }
    if (n == 0) {
        return {q.offset, {}};
    }

    const Neighbors adj = couplings(q);
    Rng rng(seed);
    Assignment x(n);
    for (auto &b : x) b = static_cast<std::uint8_t>(rng.next() >> 63);

    std::vector<double> field(q.linear);
    for (const auto &[key, c] : q.quadratic) {
        if (x[key.second]) field[key.first] += c;
        if (x[key.first]) field[key.second] += c;
    }
    double energy = q.evaluate(x);
    double best = energy;
    Assignment best_x = x;

    const double ratio = t_end / t_start;
    for (unsigned k = 0; k < schedule.sweeps; ++k) {
        const double t = t_start * std::pow(ratio, static_cast<double>(k) / schedule.sweeps);
        for (unsigned m = 0; m < n; ++m) {
            const unsigned i = static_cast<unsigned>(rng.below(n));
            const double delta = x[i] ? -field[i] : field[i];
            if (delta > 0.0 && rng.uniform() >= std::exp(-delta / t)) {
                continue;
            }
            x[i] ^= 1;
            energy += delta;
            const double sign = x[i] ? 1.0 : -1.0;
            for (auto [j, c] : adj[i]) field[j] += sign * c;
            if (energy < best) {
                best = energy;
                best_x = x;
            }
        }
    }
    return {q.evaluate(best_x), std::move(best_x)};
}

AnnealResult anneal_restarts(const Qubo &q, const AnnealSchedule &schedule, std::uint64_t seed, unsigned restarts,
                             unsigned threads) {
    if (restarts < 1) {
        throw std::invalid_argument("need at least one annealing restart");
    }
    std::vector<AnnealResult> runs(restarts);
    parallel_for(restarts, threads,
                 [&](std::size_t r) { runs[r] = simulated_annealing(q, schedule, Rng::mix(seed, r)); });
    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r) {
        if (runs[r].energy < runs[best].energy) best = r;
    }
    return std::move(runs[best]);
}

}  // namespace aoas
