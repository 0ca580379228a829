// Copyright 2026 The Shadowguard Authors
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

// Experiment drivers: gradient-variance scans, small-angle entropy growth,
// single-step entanglement bounds, WBP-free VQE runs, ground-truth data
// and measurement-budget calculators. Every command is deterministic given
// (config, seed) and embeds the config and version in its outputs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "shadowguard/budgets.hpp"
#include "shadowguard/entropy.hpp"
#include "shadowguard/experiments.hpp"
#include "shadowguard/io.hpp"
#include "shadowguard/version.hpp"

namespace sg = shadowguard;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
};

sg::Json load_config(const CommonArgs& args) {
    if (args.config_path.empty()) {
        return sg::Json::object();
    }
    std::ifstream in(args.config_path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " +
                                 args.config_path);
    }
    sg::Json j;
    in >> j;
    return j;
}

template <typename Config>
void apply_seed_override(const CommonArgs& args, Config& config) {
    if (args.seed.has_value()) {
        config.seed = *args.seed;
    }
}

std::vector<std::string> file_comments(const sg::Json& config_echo) {
    return {"version: " + sg::version_string(),
            "config: " + config_echo.dump()};
}

void ensure_out_dir(const CommonArgs& args) {
    std::filesystem::create_directories(args.out_dir);
}

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_out = true) {
    cmd->add_option("--config", args.config_path, "JSON config file");
    cmd->add_option("--seed", args.seed, "master seed override");
    if (needs_out) {
        cmd->add_option("--out", args.out_dir, "output directory");
    }
}

int cmd_bp_scan(const CommonArgs& args) {
    auto config = sg::bp_scan_config_from_json(load_config(args));
    apply_seed_override(args, config);
    const auto rows = sg::run_bp_scan(config);
    std::vector<std::vector<double>> table;
    table.reserve(rows.size());
    for (const auto& row : rows) {
        table.push_back({static_cast<double>(row.n_qubits),
                         static_cast<double>(row.depth), row.var_grad,
                         row.mean_s2_half, row.mean_s2_k2});
    }
    ensure_out_dir(args);
    const std::string path = args.out_dir + "/bp_scan.csv";
    sg::write_csv(path, {"N", "p", "var_grad", "s2_half", "s2_k2"}, table,
                  file_comments(sg::to_json(config)));
    std::cout << "wrote " << path << " (" << table.size() << " rows)\n";
    return 0;
}

int cmd_small_angle(const CommonArgs& args) {
    auto config = sg::small_angle_config_from_json(load_config(args));
    apply_seed_override(args, config);
    const auto rows = sg::run_small_angle_scan(config);
    std::vector<std::vector<double>> table;
    table.reserve(rows.size());
    for (const auto& row : rows) {
        table.push_back({row.eps_theta, static_cast<double>(row.depth),
                         static_cast<double>(row.seed), row.s2});
    }
    ensure_out_dir(args);
    const std::string path = args.out_dir + "/small_angle.csv";
    sg::write_csv(path, {"eps_theta", "p", "seed", "s2"}, table,
                  file_comments(sg::to_json(config)));
    std::cout << "wrote " << path << " (" << table.size() << " rows)\n";
    return 0;
}

int cmd_step_bound(const CommonArgs& args) {
    auto config = sg::step_bound_config_from_json(load_config(args));
    apply_seed_override(args, config);
    const auto rows = sg::run_step_bound(config);
    std::vector<std::vector<double>> table;
    table.reserve(rows.size());
    for (const auto& row : rows) {
        table.push_back({static_cast<double>(row.seed), row.eta,
                         row.grad_norm, row.trace_distance_exact,
                         row.delta_purity, row.purity_bound, row.step_bound});
    }
    ensure_out_dir(args);
    const std::string path = args.out_dir + "/step_bound.csv";
    sg::write_csv(path,
                  {"seed", "eta", "grad_norm", "trace_distance",
                   "delta_purity", "purity_bound", "step_bound"},
                  table, file_comments(sg::to_json(config)));
    std::cout << "wrote " << path << " (" << table.size() << " rows)\n";
    return 0;
}

int cmd_vqe(const CommonArgs& args) {
    auto config = sg::vqe_config_from_json(load_config(args));
    apply_seed_override(args, config);
    sg::BuiltModel model;
    const auto results = sg::run_vqe_experiment(config, &model);
    ensure_out_dir(args);

    const sg::Json config_echo = sg::to_json(config);
    for (const auto& result : results) {
        sg::Json j = sg::to_json(result.record);
        j["seed"] = result.seed;
        j["eta"] = result.eta;
        j["config"] = config_echo;
        j["version"] = sg::version_string();
        if (model.has_graph) {
            j["graph"] = sg::to_json(model.graph);
        }
        const std::string stem = args.out_dir + "/run_seed" +
                                 std::to_string(result.seed) + "_eta" +
                                 sg::format_double(result.eta);
        sg::write_text_file(stem + ".json", j.dump(2) + "\n");

        std::vector<std::vector<double>> table;
        table.reserve(result.record.rows.size());
        for (const auto& row : result.record.rows) {
            table.push_back({static_cast<double>(row.iter), row.energy,
                             row.s2, row.grad_norm, row.eta});
        }
        sg::write_csv(stem + ".csv",
                      {"iteration", "energy", "s2", "grad_norm", "eta"},
                      table, file_comments(config_echo));
    }
    std::cout << "wrote " << results.size() << " run records to "
              << args.out_dir << "\n";
    return 0;
}

int cmd_ground_truth(const CommonArgs& args) {
    const sg::Json j = load_config(args);
    sg::ModelSpec spec;
    if (j.contains("model")) {
        spec = sg::model_spec_from_json(j.at("model"));
    }
    int region_k = j.value("region_k", 2);
    std::uint64_t seed = j.value("seed", std::uint64_t{1});
    if (args.seed.has_value()) {
        seed = *args.seed;
    }
    sg::Rng model_rng = sg::Rng(seed).derive(0x6d6f64656cULL);
    const sg::BuiltModel model = sg::build_model(spec, model_rng);
    const auto result = sg::ground_truth(model.hamiltonian, spec.n_qubits,
                                         sg::Region::first_k(region_k));
    sg::Json out{{"model", sg::to_json(spec)},
                 {"seed", seed},
                 {"region_k", result.region_k},
                 {"energy", result.energy},
                 {"s2_region", result.s2_region},
                 {"page_value", result.page_value},
                 {"ratio", result.ratio},
                 {"version", sg::version_string()}};
    if (model.has_graph) {
        out["graph"] = sg::to_json(model.graph);
    }
    ensure_out_dir(args);
    const std::string path = args.out_dir + "/ground_truth.json";
    sg::write_text_file(path, out.dump(2) + "\n");
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct BudgetArgs {
    int k = 2;
    long long n_observables = 10;
    double epsilon = 0.1;
    double delta = 0.1;
    double purity = 1.0;
    bool json_output = false;
};

int cmd_budget(const BudgetArgs& args) {
    const long long observables = sg::budget_observables(
        args.k, args.n_observables, args.epsilon, args.delta);
    const long long purity =
        sg::budget_purity(args.k, args.epsilon, args.delta, args.purity);
    const long long gradient = sg::budget_gradient(
        args.k, args.n_observables, args.epsilon, args.delta);
    if (args.json_output) {
        sg::Json out{{"k", args.k},
                     {"L", args.n_observables},
                     {"epsilon", args.epsilon},
                     {"delta", args.delta},
                     {"purity_upper_bound", args.purity},
                     {"observables", observables},
                     {"purity", purity},
                     {"gradient", gradient},
                     {"version", sg::version_string()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "observables: T >= " << observables << "\n"
                  << "purity:      T >= " << purity << "\n"
                  << "gradient:    T >= " << gradient << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Statevector VQE with classical-shadow estimation and "
                 "weak-barren-plateau avoidance"};
    app.set_version_flag("--version", sg::version_string());
    app.require_subcommand(1);

    CommonArgs bp_args;
    add_common(app.add_subcommand("bp-scan",
                                  "gradient-variance saturation scan"),
               bp_args);
    CommonArgs sa_args;
    add_common(app.add_subcommand("small-angle",
                                  "entropy growth vs eps_theta"),
               sa_args);
    CommonArgs sb_args;
    add_common(app.add_subcommand("step-bound",
                                  "single-step entanglement bounds"),
               sb_args);
    CommonArgs vqe_args;
    add_common(app.add_subcommand("vqe", "WBP-free optimization runs"),
               vqe_args);
    CommonArgs gt_args;
    add_common(app.add_subcommand("ground-truth",
                                  "exact ground-state reference data"),
               gt_args);

    BudgetArgs budget_args;
    CLI::App* budget = app.add_subcommand(
        "budget", "shadow measurement budgets (observables/purity/gradient)");
    budget->add_option("--k", budget_args.k, "observable locality");
    budget->add_option("--L", budget_args.n_observables, "number of terms");
    budget->add_option("--epsilon", budget_args.epsilon, "accuracy");
    budget->add_option("--delta", budget_args.delta, "failure probability");
    budget->add_option("--purity", budget_args.purity,
                       "purity upper bound (purity budget)");
    budget->add_flag("--json", budget_args.json_output, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help / --version
        }
        sg::Json err{{"error", e.what()}, {"code", "usage"}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand("bp-scan")) {
            return cmd_bp_scan(bp_args);
        }
        if (app.got_subcommand("small-angle")) {
            return cmd_small_angle(sa_args);
        }
        if (app.got_subcommand("step-bound")) {
            return cmd_step_bound(sb_args);
        }
        if (app.got_subcommand("vqe")) {
            return cmd_vqe(vqe_args);
        }
        if (app.got_subcommand("ground-truth")) {
            return cmd_ground_truth(gt_args);
        }
        if (app.got_subcommand("budget")) {
            return cmd_budget(budget_args);
        }
        throw std::logic_error("no subcommand dispatched");
    } catch (const std::exception& e) {
        sg::Json err{{"error", e.what()}, {"code", "runtime"}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
