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


// Acceptance runner. With no arguments every criterion runs; otherwise only
// the criterion numbers given on the command line. One line per criterion,
// exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "aoas/error.hpp"
#include "aoas/grover.hpp"
#include "aoas/landscape.hpp"
#include "aoas/mixers.hpp"
#include "aoas/problems.hpp"
#include "aoas/qaoa.hpp"
#include "aoas/random.hpp"
#include "aoas/solvers.hpp"
#include "aoas/spanning_tree.hpp"
#include "oracles/dense.hpp"
#include "oracles/enumerate.hpp"

using namespace aoas;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

StateVector random_state(unsigned n, Rng &rng, const Predicate &support = {}) {
    std::vector<cplx> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (support && !support(i)) continue;
        amps[i] = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        norm += std::norm(amps[i]);
    }
    for (auto &a : amps) a /= std::sqrt(norm);
    return StateVector::from_amplitudes(std::move(amps));
}

DiagonalCost random_cost(unsigned n, Rng &rng) {
    std::vector<double> v(std::size_t{1} << n);
    for (auto &c : v) c = rng.uniform(-2, 2);
    return DiagonalCost(n, std::move(v));
}

std::vector<unsigned> shuffled_qubits(unsigned n, Rng &rng) {
    std::vector<unsigned> q(n);
    for (unsigned i = 0; i < n; ++i) q[i] = i;
    for (unsigned i = n; i > 1; --i) std::swap(q[i - 1], q[rng.below(i)]);
    return q;
}

// Random partition of a shuffled prefix of the qubits into groups of size 1..max_group.
std::vector<std::vector<unsigned>> random_groups(unsigned n, unsigned max_group, Rng &rng) {
    auto qubits = shuffled_qubits(n, rng);
    std::vector<std::vector<unsigned>> groups;
    std::size_t pos = 0;
    while (pos < n) {
        std::size_t size = 1 + rng.below(max_group);
        if (pos + size > n) break;
        groups.emplace_back(qubits.begin() + pos, qubits.begin() + pos + size);
        pos += size;
    }
    if (groups.empty()) groups.push_back({qubits[0]});
    return groups;
}

MixerSpec random_mixer(unsigned variant, unsigned n, Rng &rng) {
    switch (variant % 3) {
        case 0:
            return TransverseField{};
        case 1:
            return XYRingGroups{random_groups(n, n, rng)};
        default: {
            OrderedProduct prod;
            std::size_t terms = 1 + rng.below(2 * n);
            for (std::size_t t = 0; t < terms; ++t) {
                unsigned a = static_cast<unsigned>(rng.below(n));
                if (n >= 2 && rng.uniform() < 0.5) {
                    unsigned b = static_cast<unsigned>(rng.below(n - 1));
                    if (b >= a) ++b;
                    prod.terms.push_back(MixerTerm::xy(a, b));
                } else {
                    prod.terms.push_back(MixerTerm::x(a));
                }
            }
            return prod;
        }
    }
}

QaoaParams random_params(std::size_t p, Rng &rng) {
    QaoaParams params;
    for (std::size_t k = 0; k < p; ++k) {
        params.gammas.push_back(rng.uniform(-kPi, kPi));
        params.betas.push_back(rng.uniform(-kPi, kPi));
    }
    return params;
}

oracle::Vector to_eigen(const StateVector &s) {
    oracle::Vector v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) v[static_cast<Eigen::Index>(i)] = s[i];
    return v;
}

std::vector<double> to_vector(const DiagonalCost &c) { return {c.values().begin(), c.values().end()}; }

// ---------------------------------------------------------------------------

Outcome ring_ratio_law() {
    Stopwatch clock;
    auto problem = make_ring_of_disagrees(8);
    auto cost = cost_table(problem);
    auto init = StateVector::uniform(8);
    OptimizerConfig config;
    config.restarts = 32;
    config.seed = 0;
    config.symmetric = true;
    bool pass = true;
    std::string detail;
    for (std::size_t p : {1, 2}) {
        double target = (2.0 * p + 1) / (2.0 * p + 2);
        auto result = optimize_params(cost, TransverseField{}, init, p, config);
        double ratio = result.ratio.value_or(-1.0);
        pass = pass && std::abs(ratio - target) <= 1e-3;
        detail += fmt("p=%zu ratio %.6f (target %.6f), ", p, ratio, target);
    }
    double t = clock.seconds();
    pass = pass && t < 120.0;
    return {pass, detail + fmt("%.2f s", t)};
}

Outcome exact_depth() {
    Stopwatch clock;
    auto cost = cost_table(make_ring_of_disagrees(6));
    OptimizerConfig config;
    config.restarts = 32;
    config.seed = 0;
    auto result = optimize_params(cost, TransverseField{}, StateVector::uniform(6), 4, config);
    double ratio = result.ratio.value_or(-1.0);
    double t = clock.seconds();
    return {ratio >= 0.999 && t < 300.0, fmt("n=6 p=4 ratio %.9f, %.2f s", ratio, t)};
}

Outcome landscape_shape() {
    Stopwatch clock;
    auto cost = cost_table(make_ring_of_disagrees(8));
    GridAxis axis{-kPi, kPi, 101};
    auto land = landscape_scan(cost, TransverseField{}, StateVector::uniform(8), axis, axis, true);
    double global = land.min();
    auto clusters = local_minimum_clusters(land);
    std::size_t interior = 0, near_global = 0, traps = 0;
    for (const auto &c : clusters) {
        if (!c.interior) continue;
        ++interior;
        if (c.value - global <= 1e-6) {
            ++near_global;
        } else {
            ++traps;
        }
    }
    bool a = interior == 4 && near_global == 4;
    bool b = has_mixed_neighbours(land, 50, 50);
    bool c = traps == 0;
    double t = clock.seconds();
    return {a && b && c && t < 600.0,
            fmt("(a) %s: %zu interior minimum clusters, %zu within 1e-6 of global %.9f; "
                "(b) %s: origin has neighbours above and below; (c) %s: %zu higher interior minima; %.2f s",
                a ? "pass" : "FAIL", interior, near_global, global, b ? "pass" : "FAIL", c ? "pass" : "FAIL",
                traps, t)};
}

Outcome grover_scaling() {
    Stopwatch clock;
    std::vector<unsigned> ns{4, 5, 6, 7, 8, 9, 10, 11, 12};
    GroverScalingOptions options;
    options.gamma_scan = 64;
    options.threshold = 0.5;
    auto runs = grover_sweep(ns, options);
    std::string peaks;
    for (unsigned n : ns) {
        double best = 0.0;
        for (const auto &r : runs) {
            if (r.n != n) continue;
            for (double v : r.trace) best = std::max(best, v);
        }
        peaks += fmt("%s%u:%.4f", peaks.empty() ? "" : " ", n, best);
    }
    try {
        auto fit = scaling_fit(ns, runs, options);
        bool within = true;
        for (const auto &pt : fit.per_n) {
            double ref = reference_query_count(pt.n);
            double ratio = static_cast<double>(pt.steps) / ref;
            within = within && ratio <= 2.0 && ratio >= 0.5;
        }
        bool slope_ok = fit.slope >= 0.45 && fit.slope <= 0.55;
        double t = clock.seconds();
        return {slope_ok && within && t < 900.0,
                fmt("slope %.4f, per-n T within 2x: %s, %.2f s", fit.slope, within ? "yes" : "no", t)};
    } catch (const NoHitError &e) {
        return {false, fmt("no hit at threshold 0.5 (%s); peak success per n: %s; %.2f s", e.what(), peaks.c_str(),
                           clock.seconds())};
    }
}

// Orients an undirected tree away from vertex 0.
std::vector<std::pair<unsigned, unsigned>> rooted_arcs(unsigned n, const std::vector<std::pair<unsigned, unsigned>> &edges) {
    std::vector<std::vector<unsigned>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::pair<unsigned, unsigned>> arcs;
    std::vector<bool> seen(n, false);
    std::queue<unsigned> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
        unsigned u = queue.front();
        queue.pop();
        for (unsigned v : adj[u]) {
            if (seen[v]) continue;
            seen[v] = true;
            arcs.emplace_back(u, v);
            queue.push(v);
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

// Walks all 2^n assignments in Gray-code order with incremental energy and
// objective. Zero penalty means energy == objective energy, exactly.
struct SoundnessReport {
    bool pass;
    std::string detail;
};

SoundnessReport exhaustive_soundness(const char *name, const Graph &g, const SpanningTreeOptions &options) {
    auto [q, enc] = spanning_tree_qubo(g, options);
    const unsigned n = q.n;
    std::vector<std::vector<std::pair<unsigned, double>>> adj(n);
    for (const auto &[key, c] : q.quadratic) {
        adj[key.first].emplace_back(key.second, c);
        adj[key.second].emplace_back(key.first, c);
    }
    std::vector<double> objective(n, 0.0);
    for (unsigned i = 0; i < n; ++i) {
        const auto &l = enc.labels()[i];
        if (l.kind == VarLabel::Kind::x) objective[i] = enc.objective_B() * g.weight(l.a, l.b);
    }

    std::vector<std::uint8_t> x(n, 0);
    double energy = q.offset, obj = enc.offset(), best = energy;
    std::set<std::vector<std::pair<unsigned, unsigned>>> decoded;
    std::size_t zero_states = 0, infeasible_zero = 0;
    auto visit = [&](std::uint64_t bits) {
        best = std::min(best, energy);
        if (energy != obj) return;
        ++zero_states;
        auto d = decode_tree(to_assignment(bits, n), enc);
        if (!d.feasible()) {
            ++infeasible_zero;
            return;
        }
        auto arcs = d.edges;
        std::sort(arcs.begin(), arcs.end());
        decoded.insert(arcs);
    };
    std::uint64_t bits = 0;
    visit(bits);
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
        unsigned i = static_cast<unsigned>(__builtin_ctzll(k));
        double delta = q.linear[i];
        for (auto [j, c] : adj[i]) {
            if (x[j]) delta += c;
        }
        if (x[i]) {
            energy -= delta;
            obj -= objective[i];
        } else {
            energy += delta;
            obj += objective[i];
        }
        x[i] ^= 1;
        bits ^= std::uint64_t{1} << i;
        visit(bits);
    }

    std::set<std::vector<std::pair<unsigned, unsigned>>> expected;
    double min_weight = INFINITY;
    for (const auto &t : oracle::spanning_trees(g)) {
        expected.insert(rooted_arcs(g.vertices(), t.edges));
        min_weight = std::min(min_weight, t.weight);
    }
    double want = enc.offset() + enc.objective_B() * min_weight;
    bool pass = infeasible_zero == 0 && decoded == expected && best == want;
    return {pass, fmt("%s: %u vars, %zu zero-penalty states onto %zu/%zu trees, %zu undecodable, min %.17g vs %.17g",
                      name, n, zero_states, decoded.size(), expected.size(), infeasible_zero, best, want)};
}

Outcome encoding_soundness() {
    Stopwatch clock;
    SpanningTreeOptions options;
    options.objective_B = 2.0;
    options.offset = 1.5;
    Graph k3(3, {{0, 1, 2.0}, {1, 2, 1.0}, {0, 2, 3.0}});
    Graph c4(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 3.0}, {3, 0, 4.0}});
    auto a = exhaustive_soundness("K3", k3, options);
    auto b = exhaustive_soundness("C4", c4, options);
    double t = clock.seconds();
    return {a.pass && b.pass && t < 60.0, a.detail + "; " + b.detail + fmt("; %.2f s", t)};
}

Outcome end_to_end_solve() {
    Stopwatch clock;
    SpanningTreeOptions options;
    options.max_degree = 2;
    AnnealSchedule schedule;
    schedule.sweeps = 2000;
    std::size_t good = 0;
    std::string misses;
    for (std::uint64_t batch = 0; batch < 100; ++batch) {
        bool ok = true;
        for (unsigned n : {4u, 5u}) {
            Rng rng = Rng::stream(batch, n);
            std::vector<Edge> edges;
            for (unsigned u = 0; u < n; ++u) {
                for (unsigned v = u + 1; v < n; ++v) edges.push_back({u, v, static_cast<double>(1 + rng.below(9))});
            }
            Graph g(n, edges);
            double best_tree = INFINITY;
            for (const auto &t : oracle::spanning_trees(g)) {
                if (*std::max_element(t.degree.begin(), t.degree.end()) <= 2) best_tree = std::min(best_tree, t.weight);
            }
            auto [q, enc] = spanning_tree_qubo(g, options);
            auto sa = anneal_restarts(q, schedule, Rng::mix(batch, 1000 + n), 64);
            double want = enc.offset() + enc.objective_B() * best_tree;
            bool hit = std::abs(sa.energy - want) <= 1e-9 && decode_tree(sa.state, enc).feasible();
            if (!hit) misses += fmt(" %llu/K%u", static_cast<unsigned long long>(batch), n);
            ok = ok && hit;
        }
        good += ok;
    }
    double t = clock.seconds();
    return {good >= 95 && t < 300.0,
            fmt("%zu/100 batches matched enumeration%s%s; %.2f s", good, misses.empty() ? "" : "; misses:",
                misses.c_str(), t)};
}

Outcome feasibility_preservation() {
    Rng rng(7);
    double worst = 0.0;
    for (int inst = 0; inst < 20; ++inst) {
        unsigned n = 2 + static_cast<unsigned>(rng.below(11));
        auto groups = random_groups(n, 5, rng);
        auto feasible = feasible_onehot_predicate(groups);
        auto state = random_state(n, rng, feasible);
        XYRingGroups mixer{groups};
        for (int layer = 0; layer < 100; ++layer) {
            apply_mixer(state, mixer, rng.uniform(-kPi, kPi));
            worst = std::max(worst, 1.0 - subspace_probability(state, feasible));
        }
    }
    return {worst < 1e-10, fmt("20 instances x 100 layers, max leak %.3e", worst)};
}

Outcome oracle_equivalence() {
    Rng rng(11);
    double worst = 0.0;
    std::size_t per_variant[3] = {0, 0, 0};
    for (unsigned inst = 0; inst < 50; ++inst) {
        unsigned n = 1 + static_cast<unsigned>(rng.below(6));
        std::size_t p = 1 + rng.below(3);
        auto mixer = random_mixer(inst, n, rng);
        auto cost = random_cost(n, rng);
        auto init = random_state(n, rng);
        auto params = random_params(p, rng);
        double fast = expectation_diagonal(run_qaoa(cost, mixer, init, params), cost);
        auto dense = oracle::qaoa_state(to_vector(cost), mixer, n, to_eigen(init), params.gammas, params.betas);
        double ref = oracle::expectation(dense, to_vector(cost));
        worst = std::max(worst, std::abs(fast - ref));
        ++per_variant[inst % 3];
    }
    return {worst <= 1e-9, fmt("50 instances (x %zu, xy-ring %zu, ordered %zu), max |diff| %.3e", per_variant[0],
                               per_variant[1], per_variant[2], worst)};
}

Outcome invariants() {
    Rng rng(13);
    std::vector<std::string> failed;

    double norm_err = 0.0, phase_err = 0.0, mean_err = 0.0;
    for (unsigned inst = 0; inst < 30; ++inst) {
        unsigned n = 1 + static_cast<unsigned>(rng.below(10));
        auto cost = random_cost(n, rng);
        auto mixer = random_mixer(inst, n, rng);
        auto init = random_state(n, rng);
        auto out = run_qaoa(cost, mixer, init, random_params(1 + rng.below(4), rng));
        norm_err = std::max(norm_err, std::abs(out.norm() - 1.0));

        auto phased = init;
        apply_diagonal_phase(phased, cost, rng.uniform(-kPi, kPi));
        for (std::size_t i = 0; i < init.size(); ++i) {
            phase_err = std::max(phase_err, std::abs(std::abs(phased[i]) - std::abs(init[i])));
        }

        QaoaParams zero{std::vector<double>(3, 0.0), std::vector<double>(3, 0.0)};
        double e = expectation_diagonal(run_qaoa(cost, mixer, StateVector::uniform(n), zero), cost);
        mean_err = std::max(mean_err, std::abs(e - cost.mean()));
    }
    if (norm_err > 1e-10) failed.push_back("norm");
    if (phase_err > 1e-12) failed.push_back("phase magnitude");
    if (mean_err > 1e-12) failed.push_back("zero parameters");

    double grover_err = 0.0;
    for (unsigned n = 2; n <= 6; ++n) {
        double gamma = rng.uniform(0.1, kPi);
        auto base = run_grover(n, 0, gamma, 40);
        for (Bitstring t = 1; t < (Bitstring{1} << n); ++t) {
            auto other = run_grover(n, t, gamma, 40);
            for (std::size_t k = 0; k < base.trace.size(); ++k) {
                grover_err = std::max(grover_err, std::abs(base.trace[k] - other.trace[k]));
            }
        }
    }
    if (grover_err > 1e-10) failed.push_back("grover target symmetry");

    bool deterministic = true;
    {
        auto cost = cost_table(make_ring_of_disagrees(6));
        OptimizerConfig config;
        config.restarts = 8;
        config.seed = 5;
        auto a = optimize_params(cost, TransverseField{}, StateVector::uniform(6), 2, config);
        config.threads = 3;
        auto b = optimize_params(cost, TransverseField{}, StateVector::uniform(6), 2, config);
        deterministic = deterministic && a.expectation == b.expectation &&
                        a.best_params.gammas == b.best_params.gammas && a.best_params.betas == b.best_params.betas &&
                        a.evaluations == b.evaluations;

        SpanningTreeOptions st;
        st.max_degree = 2;
        auto [q, enc] = spanning_tree_qubo(complete_graph(4, 1.0), st);
        AnnealSchedule sched;
        sched.sweeps = 200;
        auto s1 = anneal_restarts(q, sched, 99, 16, 1);
        auto s2 = anneal_restarts(q, sched, 99, 16, 4);
        auto s3 = simulated_annealing(q, sched, 99);
        auto s4 = simulated_annealing(q, sched, 99);
        deterministic = deterministic && s1.energy == s2.energy && s1.state == s2.state && s3.energy == s4.energy &&
                        s3.state == s4.state;

        GridAxis axis{-1.0, 1.0, 9};
        auto l1 = landscape_scan(cost, TransverseField{}, StateVector::uniform(6), axis, axis, true, 1);
        auto l2 = landscape_scan(cost, TransverseField{}, StateVector::uniform(6), axis, axis, true, 4);
        deterministic = deterministic && l1.values == l2.values;
    }
    if (!deterministic) failed.push_back("determinism");

    std::string detail = fmt("norm %.1e, phase magnitude %.1e, zero-parameter mean %.1e, grover symmetry %.1e, "
                             "seeded solvers %s",
                             norm_err, phase_err, mean_err, grover_err, deterministic ? "bit-exact" : "DIVERGED");
    return {failed.empty(), detail};
}

}  // namespace

int main(int argc, char **argv) {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"ring ratio law", ring_ratio_law},
        {"exact depth", exact_depth},
        {"landscape shape", landscape_shape},
        {"grover scaling", grover_scaling},
        {"encoding soundness", encoding_soundness},
        {"end-to-end qubo solve", end_to_end_solve},
        {"feasibility preservation", feasibility_preservation},
        {"oracle equivalence", oracle_equivalence},
        {"invariants", invariants},
    };
    std::vector<std::size_t> selected;
    for (int i = 1; i < argc; ++i) {
        int k = std::atoi(argv[i]);
        if (k < 1 || k > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "unknown criterion %s\n", argv[i]);
            return 2;
        }
        selected.push_back(static_cast<std::size_t>(k));
    }
    if (selected.empty()) {
        for (std::size_t k = 1; k <= criteria.size(); ++k) selected.push_back(k);
    }

    int failures = 0;
    for (std::size_t k : selected) {
        const auto &[name, fn] = criteria[k - 1];
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %zu (%s): %s  %s\n", k, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
