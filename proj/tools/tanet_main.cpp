// Command-line harness: single runs, multi-seed sweeps, weight inspection.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tanet/config.hpp"
#include "tanet/harness.hpp"
#include "tanet/weights_io.hpp"

namespace {

using tanet::ExperimentConfig;

// Raw option values that need parsing/dispatch after CLI11 is done.
struct RawOptions {
    std::string task = "xor";
    std::string algo = "supervised";
    std::string trace_level = "off";
    std::vector<double> punish_range;
};

void add_common_options(CLI::App* cmd, ExperimentConfig& cfg, RawOptions& raw) {
    cmd->add_option("--task", raw.task, "tracking | maze | xor")
        ->check(CLI::IsMember({"tracking", "maze", "xor"}));
    cmd->add_option("--algo", raw.algo, "supervised | tap | tar | tac")
        ->check(CLI::IsMember({"supervised", "tap", "tar", "tac"}));
    cmd->add_option("--seed", cfg.seed, "base RNG seed");
    cmd->add_option("--lrate", cfg.params.lrate, "learning rate");
    cmd->add_option("--gamma", cfg.params.gamma, "conditioned-reward discount");
    cmd->add_option("--reward-threshold", cfg.params.reward_threshold,
                    "reward-node activation that triggers a conditioned reward");
    cmd->add_option("--punish-range", raw.punish_range,
                    "desired-activation range drawn on punished steps (two values)")
        ->expected(2);
    cmd->add_option("--init-half-width", cfg.params.init_half_width,
                    "weights start uniform in [-w, w]");
    cmd->add_option("--max-presentations", cfg.max_presentations,
                    "presentation cap (0 = task preset)");
    cmd->add_option("--probe-interval", cfg.probe_interval,
                    "presentations between convergence probes (0 = task preset)");
    cmd->add_option("--layers", cfg.layer_sizes,
                    "layer sizes, input first (empty = task preset)");
    cmd->add_flag("--disable-primary-reward", cfg.disable_primary_reward,
                  "the world never pays out (extinction runs)");
    cmd->add_option("--load-weights", cfg.load_weights_path,
                    "start from a saved weights file instead of the seeded init");
    cmd->add_option("--save-weights", cfg.save_weights_path,
                    "write final weights here");
    cmd->add_option("--trace", cfg.trace_path, "write a JSONL step trace here");
    cmd->add_option("--trace-level", raw.trace_level, "off | rewards | full")
        ->check(CLI::IsMember({"off", "rewards", "full"}));
    cmd->add_option("--out", cfg.out_path, "write the summary here (default stdout)");
}

// Returns empty on success, otherwise the message for exit code 3.
std::string resolve(ExperimentConfig& cfg, const RawOptions& raw) {
    if (!tanet::parse_task(raw.task, cfg.task)) return "unknown task " + raw.task;
    if (!tanet::parse_algo(raw.algo, cfg.algo)) return "unknown algo " + raw.algo;
    if (raw.trace_level == "off") cfg.trace_level = tanet::TraceLevel::Off;
    else if (raw.trace_level == "rewards") cfg.trace_level = tanet::TraceLevel::Rewards;
    else cfg.trace_level = tanet::TraceLevel::Full;
    if (!raw.punish_range.empty()) {
        cfg.params.punish_lo = raw.punish_range[0];
        cfg.params.punish_hi = raw.punish_range[1];
    }
    tanet::apply_defaults(cfg);
    return tanet::validate(cfg);
}

int emit(const std::string& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc << "\n";
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 3;
    }
    out << doc << "\n";
    return 0;
}

int cmd_run(ExperimentConfig cfg) {
    tanet::Trial trial(cfg);
    trial.run();
    const tanet::TrialMetrics& m = trial.metrics();
    std::fprintf(stderr, "%s/%s seed %llu: %s at %lld presentations (%.2fs)\n",
                 m.task.c_str(), m.algo.c_str(),
                 static_cast<unsigned long long>(m.seed),
                 m.converged ? "converged" : "no convergence",
                 m.presentations, m.wall_seconds);
    const int rc = emit(tanet::summary_json(m), cfg.out_path);
    if (rc != 0) return rc;
    return m.converged ? 0 : 2;
}

int cmd_sweep(ExperimentConfig cfg) {
    const tanet::SweepReport report = tanet::multi_seed(cfg);
    for (const tanet::TrialMetrics& m : report.per_seed)
        std::fprintf(stderr, "  seed %llu: %s at %lld (%.2fs)\n",
                     static_cast<unsigned long long>(m.seed),
                     m.converged ? "converged" : "cap", m.presentations,
                     m.wall_seconds);
    std::fprintf(stderr, "%zu/%zu converged, success rate %.2f\n",
                 report.converged_count, report.per_seed.size(),
                 report.success_rate);
    const int rc = emit(tanet::sweep_json(report), cfg.out_path);
    if (rc != 0) return rc;
    return report.converged_count == report.per_seed.size() ? 0 : 2;
}

int cmd_inspect(const std::string& path, bool full) {
    const tanet::Network net = tanet::load_weights(path);
    nlohmann::ordered_json j;
    j["layers"] = net.layer_sizes;
    for (std::size_t l = 0; l + 1 < net.layer_sizes.size(); ++l) {
        nlohmann::ordered_json stats;
        double lo = net.weight[l][0][0], hi = lo, sum = 0.0;
        std::size_t count = 0;
        for (std::size_t u = 0; u < net.weight[l].size(); ++u) {
            for (double w : net.weight[l][u]) {
                lo = std::min(lo, w);
                hi = std::max(hi, w);
                sum += w;
                ++count;
            }
            sum += net.bias[l][u];
            ++count;
        }
        stats["weights"] = count;
        stats["min"] = lo;
        stats["max"] = hi;
        stats["mean"] = sum / static_cast<double>(count);
        if (full) {
            stats["weight"] = net.weight[l];
            stats["bias"] = net.bias[l];
            stats["threshold"] = net.threshold[l + 1];
        }
        j["layer_" + std::to_string(l + 1)] = std::move(stats);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"threshold-based reinforcement learning on toy worlds"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a TOML/INI file");

    ExperimentConfig cfg;
    RawOptions raw;

    CLI::App* run = app.add_subcommand("run", "one seeded run");
    add_common_options(run, cfg, raw);

    std::size_t sweep_seeds = 20;
    CLI::App* sweep = app.add_subcommand("sweep", "aggregate over consecutive seeds");
    add_common_options(sweep, cfg, raw);
    sweep->add_option("--seeds", sweep_seeds, "number of consecutive seeds");
    sweep->add_option("--jobs", cfg.jobs, "parallel workers (1 = serial)");

    std::string inspect_path;
    bool inspect_full = false;
    CLI::App* inspect = app.add_subcommand("inspect-weights", "describe a weights file");
    inspect->add_option("path", inspect_path, "weights file")->required();
    inspect->add_flag("--full", inspect_full, "dump every weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;  // 3 = configuration error; 0 covers --help
    }

    try {
        if (inspect->parsed()) return cmd_inspect(inspect_path, inspect_full);
        const std::string err = resolve(cfg, raw);
        if (!err.empty()) {
            std::cerr << "error: " << err << "\n";
            return 3;
        }
        if (sweep->parsed()) {
            cfg.n_seeds = sweep_seeds;
            return cmd_sweep(cfg);
        }
        return cmd_run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
