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

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "aoas/error.hpp"
#include "aoas/grover.hpp"
#include "aoas/json_io.hpp"
#include "aoas/landscape.hpp"
#include "aoas/problems.hpp"
#include "aoas/qaoa.hpp"
#include "aoas/solvers.hpp"
#include "aoas/spanning_tree.hpp"

namespace aoas::cli {

namespace {

/// Reads --config files written as JSON. Nested objects address
/// subcommands: {"qaoa": {"n": 8, "p": 1}} sets `qaoa --n 8 --p 1`.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App *, bool, bool, std::string) const override { return "{}\n"; }

    std::vector<CLI::ConfigItem> from_config(std::istream &input) const override {
        Json doc;
        try {
            doc = Json::parse(input);
        } catch (const Json::parse_error &e) {
            throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!doc.is_object()) {
            throw CLI::ConversionError("config must be a JSON object");
        }
        std::vector<CLI::ConfigItem> items;
        flatten(doc, {}, items);
        return items;
    }

  private:
    static std::string scalar(const Json &value) {
        return value.is_string() ? value.get<std::string>() : value.dump();
    }

    static void flatten(const Json &object, const std::vector<std::string> &parents,
                        std::vector<CLI::ConfigItem> &items) {
        for (const auto &[key, value] : object.items()) {
            if (value.is_object()) {
                auto nested = parents;
                nested.push_back(key);
                flatten(value, nested, items);
                continue;
            }
            if (value.is_null()) continue;
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array()) {
                for (const Json &v : value) item.inputs.push_back(scalar(v));
            } else {
                item.inputs.push_back(scalar(value));
            }
            items.push_back(std::move(item));
        }
    }
};

struct ProblemArgs {
    std::string problem;
    unsigned n = 0;
    std::string graph;
    unsigned colors = 3;
    std::string mixer;
};

void add_problem_options(CLI::App *cmd, ProblemArgs &args) {
    cmd->add_option("--problem", args.problem, "ring | maxcut | one_hot_demo")
        ->required()
        ->check(CLI::IsMember({"ring", "maxcut", "one_hot_demo"}));
    cmd->add_option("--n", args.n, "Ring size (ring problem)");
    cmd->add_option("--graph", args.graph, "Graph JSON (maxcut, one_hot_demo)")->check(CLI::ExistingFile);
    cmd->add_option("--colors", args.colors, "Colours per vertex (one_hot_demo)")->capture_default_str();
    cmd->add_option("--mixer", args.mixer, "Mixer JSON; default transverse field")->check(CLI::ExistingFile);
}

struct Setup {
    DiagonalCost cost;
    MixerSpec mixer;
    StateVector init;
};

Setup build_setup(const ProblemArgs &args) {
    ProblemInstance problem = [&] {
        if (args.problem == "ring") {
            if (args.n == 0) throw std::invalid_argument("--problem ring needs --n");
            return make_ring_of_disagrees(args.n);
        }
        if (args.graph.empty()) throw std::invalid_argument("--problem " + args.problem + " needs --graph");
        Graph g = graph_from_json(read_json_file(args.graph));
        return args.problem == "maxcut" ? make_maxcut(std::move(g)) : make_one_hot_demo(std::move(g), args.colors);
    }();
    DiagonalCost cost = cost_table(problem);
    MixerSpec mixer = TransverseField{};
    if (!args.mixer.empty()) {
        mixer = mixer_from_json(read_json_file(args.mixer));
    }
    validate_mixer(mixer, cost.qubits());
    StateVector init = StateVector::uniform(cost.qubits());
    if (const auto *rings = std::get_if<XYRingGroups>(&mixer)) {
        init = uniform_over(cost.qubits(), feasible_onehot_predicate(rings->groups));
    }
    return {std::move(cost), std::move(mixer), std::move(init)};
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream file(path, std::ios::binary);
    file << text;
    if (!file) throw std::runtime_error("cannot write " + path);
}

struct QaoaArgs {
    ProblemArgs problem;
    unsigned p = 1;
    bool symmetric = false;
    std::size_t restarts = 32;
    std::uint64_t seed = 0;
    std::size_t budget = 500;
    unsigned threads = 1;
    std::string out;
};

int cmd_qaoa(const QaoaArgs &args, std::ostream &out) {
    Setup s = build_setup(args.problem);
    QaoaResult result = [&] {
        if (args.p == 0) return evaluate_depth_zero(s.cost, s.init);
        OptimizerConfig config;
        config.restarts = args.restarts;
        config.seed = args.seed;
        config.symmetric = args.symmetric;
        config.evaluations_per_start = args.budget;
        config.threads = args.threads;
        return optimize_params(s.cost, s.mixer, s.init, args.p, config);
    }();
    write_json_file(args.out, result_to_json(result));
    out << "expectation " << result.expectation;
    if (result.ratio) out << " ratio " << *result.ratio;
    out << '\n';
    return kSuccess;
}

struct LandscapeArgs {
    ProblemArgs problem;
    std::vector<std::size_t> grid{101, 101};
    std::vector<double> gamma_range{-std::numbers::pi, std::numbers::pi};
    std::vector<double> beta_range{-std::numbers::pi, std::numbers::pi};
    bool symmetric = false;
    unsigned threads = 1;
    std::string out;
};

int cmd_landscape(const LandscapeArgs &args, std::ostream &out) {
    Setup s = build_setup(args.problem);
    const std::size_t rows = args.grid.at(0);
    const std::size_t cols = args.grid.size() > 1 ? args.grid[1] : rows;
    GridAxis row_axis{args.gamma_range[0], args.gamma_range[1], rows};
    GridAxis col_axis = args.symmetric ? GridAxis{args.gamma_range[0], args.gamma_range[1], cols}
                                       : GridAxis{args.beta_range[0], args.beta_range[1], cols};
    Landscape l = landscape_scan(s.cost, s.mixer, s.init, row_axis, col_axis, args.symmetric, args.threads);
    std::ostringstream csv;
    write_landscape_csv(csv, l);
    write_text(args.out, csv.str());
    out << rows * cols << " cells, minimum " << l.min() << '\n';
    return kSuccess;
}

struct GroverArgs {
    std::vector<unsigned> ns;
    std::size_t gamma_scan = 64;
    double threshold = 0.5;
    std::uint64_t target = 0;
    unsigned threads = 1;
    std::string csv;
    std::string fit;
};

int cmd_grover(const GroverArgs &args, std::ostream &out) {
    GroverScalingOptions opts;
    opts.gamma_scan = args.gamma_scan;
    opts.threshold = args.threshold;
    opts.target = args.target;
    opts.threads = args.threads;
    if (!args.fit.empty()) {
        std::set<unsigned> distinct(args.ns.begin(), args.ns.end());
        if (distinct.size() < 4 || distinct.size() != args.ns.size()) {
            throw std::invalid_argument("--fit needs at least 4 distinct register sizes");
        }
    }
    std::vector<GroverRun> runs = grover_sweep(args.ns, opts);
    if (!args.csv.empty()) {
        std::ostringstream csv;
        write_grover_csv(csv, runs);
        write_text(args.csv, csv.str());
    }
    if (!args.fit.empty()) {
        GroverScalingFit fit = scaling_fit(args.ns, runs, opts);
        write_json_file(args.fit, fit_to_json(fit));
        out << "slope " << fit.slope << " intercept " << fit.intercept << '\n';
    }
    return kSuccess;
}

struct QuboBuildArgs {
    std::string graph;
    std::optional<unsigned> delta;
    double B = 1.0;
    std::optional<double> A;
    double offset = 0.0;
    std::string out;
    std::string encoding;
};

std::string default_sidecar(const std::string &out) {
    std::filesystem::path p(out);
    return p.replace_extension().string() + ".encoding.json";
}

int cmd_qubo_build(const QuboBuildArgs &args, std::ostream &out) {
    SpanningTreeOptions opts;
    opts.objective_B = args.B;
    opts.penalty_A = args.A;
    opts.max_degree = args.delta;
    opts.offset = args.offset;
    auto [q, enc] = spanning_tree_qubo(graph_from_json(read_json_file(args.graph)), opts);
    write_json_file(args.out, qubo_to_json(q));
    write_json_file(args.encoding.empty() ? default_sidecar(args.out) : args.encoding, encoding_to_json(enc));
    out << q.n << " variables, " << q.quadratic.size() << " couplings\n";
    return kSuccess;
}

struct QuboSolveArgs {
    std::string qubo;
    std::string encoding;
    std::string method = "sa";
    std::uint64_t seed = 0;
    unsigned restarts = 64;
    unsigned sweeps = 2000;
    unsigned threads = 1;
    std::string out;
};

int cmd_qubo_solve(const QuboSolveArgs &args, std::ostream &out) {
    Qubo q = qubo_from_json(read_json_file(args.qubo));
    std::optional<SpanningTreeEncoding> enc;
    if (!args.encoding.empty()) {
        enc.emplace(encoding_from_json(read_json_file(args.encoding)));
        if (enc->variables() != q.n) {
            throw FormatError("encoding has " + std::to_string(enc->variables()) + " variables, Qubo has " +
                              std::to_string(q.n));
        }
    }
    double energy;
    Assignment x;
    if (args.method == "brute") {
        // Slacks and ancillas are numbered after the parent and level
        // variables and only couple within small blocks; enumerate the rest.
        std::optional<unsigned> enumerated;
        if (enc) {
            enumerated = 0;
            for (const VarLabel &l : enc->labels()) {
                if (l.kind == VarLabel::Kind::x || l.kind == VarLabel::Kind::y) ++*enumerated;
            }
        }
        BruteForceResult r = brute_force_minimize(q, enumerated);
        energy = r.energy;
        x = to_assignment(r.argmins.front(), q.n);
    } else {
        AnnealSchedule schedule;
        schedule.sweeps = args.sweeps;
        AnnealResult r = anneal_restarts(q, schedule, args.seed, args.restarts, args.threads);
        energy = r.energy;
        x = std::move(r.state);
    }
    Json report;
    if (enc) {
        report = solve_report(energy, x, decode_tree(x, *enc));
    } else {
        std::string bits;
        for (std::uint8_t b : x) bits.push_back(b ? '1' : '0');
        report = {{"energy", energy}, {"bitstring", bits}};
    }
    write_json_file(args.out, report);
    out << "energy " << energy << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app("Statevector QAOA, Grover-QAOA and spanning-tree QUBO experiments", "aoas");
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON file whose values stand in for flags; flags win");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    QaoaArgs qaoa;
    auto *qaoa_cmd = app.add_subcommand("qaoa", "Optimize QAOA angles and write a result JSON");
    add_problem_options(qaoa_cmd, qaoa.problem);
    qaoa_cmd->add_option("--p", qaoa.p, "Depth; 0 evaluates the initial state")->required();
    qaoa_cmd->add_flag("--symmetric", qaoa.symmetric, "Search beta_i = -gamma_{p+1-i} only");
    qaoa_cmd->add_option("--restarts", qaoa.restarts)->capture_default_str()->check(CLI::PositiveNumber);
    qaoa_cmd->add_option("--seed", qaoa.seed)->capture_default_str();
    qaoa_cmd->add_option("--budget", qaoa.budget, "Evaluations per restart")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    qaoa_cmd->add_option("--threads", qaoa.threads)->capture_default_str()->check(CLI::PositiveNumber);
    qaoa_cmd->add_option("--out", qaoa.out, "Result JSON path")->required();

    LandscapeArgs landscape;
    auto *land_cmd = app.add_subcommand("landscape", "Scan a depth-1 or symmetric depth-2 grid to CSV");
    add_problem_options(land_cmd, landscape.problem);
    land_cmd->add_option("--grid", landscape.grid, "Rows [cols]")->expected(1, 2)->check(CLI::Range(2, 100000));
    land_cmd->add_option("--gamma-range", landscape.gamma_range, "lo hi")->expected(2);
    land_cmd->add_option("--beta-range", landscape.beta_range, "lo hi")->expected(2);
    land_cmd->add_flag("--symmetric", landscape.symmetric, "Axes (gamma1, gamma2) of the symmetric p=2 ansatz");
    land_cmd->add_option("--threads", landscape.threads)->capture_default_str()->check(CLI::PositiveNumber);
    land_cmd->add_option("--out", landscape.out, "CSV path")->required();

    GroverArgs grover;
    auto *grover_cmd = app.add_subcommand("grover", "Periodic Grover-QAOA sweep and scaling fit");
    grover_cmd->add_option("--ns", grover.ns, "Register sizes")->required()->delimiter(',');
    grover_cmd->add_option("--gamma-scan", grover.gamma_scan)->capture_default_str()->check(CLI::PositiveNumber);
    grover_cmd->add_option("--threshold", grover.threshold)->capture_default_str()->check(CLI::Bound(0.0, 1.0));
    grover_cmd->add_option("--target", grover.target)->capture_default_str();
    grover_cmd->add_option("--threads", grover.threads)->capture_default_str()->check(CLI::PositiveNumber);
    grover_cmd->add_option("--csv", grover.csv, "Per-step CSV path");
    grover_cmd->add_option("--fit", grover.fit, "Fit summary JSON path");

    auto *qubo_cmd = app.add_subcommand("qubo", "Spanning-tree QUBO construction and solving");
    qubo_cmd->require_subcommand(1);

    QuboBuildArgs build;
    auto *build_cmd = qubo_cmd->add_subcommand("build", "Encode a graph's spanning trees as a QUBO");
    build_cmd->add_option("--graph", build.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
    build_cmd->add_option("--delta", build.delta, "Degree bound");
    build_cmd->add_option("--B", build.B, "Objective weight")->capture_default_str();
    build_cmd->add_option("--A", build.A, "Penalty weight; default B * (sum |w| + 1)");
    build_cmd->add_option("--offset", build.offset, "Constant energy offset")->capture_default_str();
    build_cmd->add_option("--out", build.out, "Qubo JSON path")->required();
    build_cmd->add_option("--encoding", build.encoding, "Sidecar path; default <out>.encoding.json");

    QuboSolveArgs solve;
    auto *solve_cmd = qubo_cmd->add_subcommand("solve", "Minimize a Qubo and decode the result");
    solve_cmd->add_option("--qubo", solve.qubo, "Qubo JSON")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--encoding", solve.encoding, "Encoding sidecar")->check(CLI::ExistingFile);
    solve_cmd->add_option("--method", solve.method)->capture_default_str()->check(CLI::IsMember({"brute", "sa"}));
    solve_cmd->add_option("--seed", solve.seed)->capture_default_str();
    solve_cmd->add_option("--restarts", solve.restarts)->capture_default_str()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--sweeps", solve.sweeps)->capture_default_str()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--threads", solve.threads)->capture_default_str()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--out", solve.out, "Report JSON path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kConfigError;
    }

    try {
        if (qaoa_cmd->parsed()) return cmd_qaoa(qaoa, out);
        if (land_cmd->parsed()) return cmd_landscape(landscape, out);
        if (grover_cmd->parsed()) return cmd_grover(grover, out);
        if (build_cmd->parsed()) return cmd_qubo_build(build, out);
        if (solve_cmd->parsed()) return cmd_qubo_solve(solve, out);
    } catch (const InfeasibleInstance &e) {
        err << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const SizeError &e) {
        err << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const NoHitError &e) {
        err << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    err << "error: no command given\n";
    return kConfigError;
}

}  // namespace aoas::cli
