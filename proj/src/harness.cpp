#include "tanet/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "tanet/backprop.hpp"
#include "tanet/tac.hpp"
#include "tanet/tap.hpp"
#include "tanet/tar.hpp"
#include "tanet/weights_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tanet {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kRolloutBudget = 8;  // twice the grid diameter

std::array<bool, 4> motor_firing(const Network& net, const Activations& acts) {
    const std::size_t out = net.layer_sizes.size() - 1;
    std::array<bool, 4> firing{};
    for (std::size_t m = 0; m < 4; ++m)
        firing[m] = fired(acts[out][m], net.threshold[out][m]);
    return firing;
}

}  // namespace

Trial::Trial(const ExperimentConfig& cfg)
    : cfg_(cfg), streams_(make_streams(cfg.seed)),
      net_(Network::make(cfg.layer_sizes, cfg.params.init_half_width, streams_.init)) {
    if (!cfg_.load_weights_path.empty()) {
        Network loaded = load_weights(cfg_.load_weights_path);
        if (loaded.layer_sizes != cfg_.layer_sizes)
            throw std::runtime_error("loaded weights do not match the configured layer sizes");
        net_ = std::move(loaded);
    }

    const bool grid = cfg_.task != Task::Xor;
    if (grid) {
        env_.emplace(cfg_.task == Task::Maze ? maze_physics() : tracking_physics(),
                     streams_.env);
        if (cfg_.algo == Algo::Tar || cfg_.algo == Algo::Tac) {
            tar_cfg_ = TarConfig{net_.output_size() - 1};
            lagged_ = true;
        }
    }
    primary_enabled_ = !cfg_.disable_primary_reward;

    metrics_.task = task_name(cfg_.task);
    metrics_.algo = algo_name(cfg_.algo);
    metrics_.seed = cfg_.seed;
    metrics_.cap = static_cast<long long>(cfg_.max_presentations);
    metrics_.breadcrumb_at.fill(-1);
    metrics_.reward_node_final.fill(0.0);

    if (cfg_.trace_level != TraceLevel::Off && !cfg_.trace_path.empty()) {
        trace_ = std::make_unique<std::ofstream>(cfg_.trace_path);
        if (!*trace_) throw std::runtime_error("cannot open trace file " + cfg_.trace_path);
    }
}

Trial::~Trial() = default;
Trial::Trial(Trial&&) noexcept = default;
Trial& Trial::operator=(Trial&&) noexcept = default;

std::vector<int> Trial::required_cells() const {
    if (cfg_.task == Task::Maze) return {3};
    std::vector<int> cells;
    for (int c = 0; c < 9; ++c)
        if (c != env_->physics().goal_cell) cells.push_back(c);
    return cells;
}

Trial::Rollout Trial::greedy_rollout(int start_cell) const {
    Rollout r;
    r.motors_mature = true;
    int cell = start_cell;
    r.path.push_back(cell);
    for (int step = 0; step < kRolloutBudget; ++step) {
        const Activations acts = forward(net_, encode_observation(cell));
        const std::size_t out = net_.layer_sizes.size() - 1;
        for (std::size_t m = 0; m < 4; ++m)
            if (!mature(acts[out][m], cfg_.params.mature_lo, cfg_.params.mature_hi))
                r.motors_mature = false;
        const Action a = decode_action(motor_firing(net_, acts));
        const int next = move_cell(cell, a, env_->physics());
        if (next == cell) return r;  // stuck: Stay decode, wall, or edge clip
        cell = next;
        r.path.push_back(cell);
        if (cell == env_->physics().goal_cell) {
            r.success = true;
            return r;
        }
    }
    return r;
}

std::vector<double> Trial::outputs_for_cell(int cell) const {
    return forward(net_, encode_observation(cell)).back();
}

double Trial::reward_node_activation(int cell) const {
    if (!tar_cfg_) throw std::logic_error("no reward output node in this configuration");
    return outputs_for_cell(cell)[tar_cfg_->reward_node_index];
}

bool Trial::xor_solved() const {
    for (std::size_t i = 0; i < XorGuidedTask::kPatterns.size(); ++i) {
        const auto& p = XorGuidedTask::kPatterns[i];
        const Activations acts = forward(net_, {p[0], p[1]});
        const double a = acts.back()[0];
        if (fired(a, net_.threshold.back()[0]) != XorGuidedTask::kTruth[i]) return false;
        if (!mature(a, cfg_.params.mature_lo, cfg_.params.mature_hi)) return false;
    }
    return true;
}

std::vector<double> Trial::xor_outputs() const {
    std::vector<double> outs;
    for (const auto& p : XorGuidedTask::kPatterns)
        outs.push_back(forward(net_, {p[0], p[1]}).back()[0]);
    return outs;
}

void Trial::trace_step(long long n, int cell, Action a, int moved_to,
                       const RewardSignal& sig) {
    if (!trace_) return;
    if (cfg_.trace_level == TraceLevel::Rewards && !sig.rewarded) return;
    ordered_json line;
    line["n"] = n;
    line["cell"] = cell;
    line["action"] = action_name(a);
    line["moved_to"] = moved_to;
    line["rewarded"] = sig.rewarded;
    line["primary"] = sig.primary;
    if (sig.rewarded && !sig.primary) line["conditioned_value"] = sig.value;
    *trace_ << line.dump() << "\n";
}

void Trial::trace_xor(long long n, std::size_t pattern, bool fired_out, bool rewarded) {
    if (!trace_) return;
    if (cfg_.trace_level == TraceLevel::Rewards && !rewarded) return;
    ordered_json line;
    line["n"] = n;
    line["pattern"] = pattern;
    line["fired"] = fired_out;
    line["rewarded"] = rewarded;
    *trace_ << line.dump() << "\n";
}

void Trial::prime() {
    pending_acts_ = forward(net_, encode_observation(env_->target_cell()));
    ++metrics_.presentations;
    have_pending_ = true;
}

void Trial::step() {
    const std::size_t out = net_.layer_sizes.size() - 1;

    if (cfg_.task == Task::Xor) {
        const std::size_t pattern = xor_task_.index();
        const auto& p = xor_task_.current();
        const Activations acts = forward(net_, {p[0], p[1]});
        ++metrics_.presentations;
        const bool fired_out = fired(acts[out][0], net_.threshold[out][0]);
        const bool rewarded = xor_task_.step(fired_out) && primary_enabled_;

        if (cfg_.algo == Algo::Supervised) {
            backprop_update(net_, acts,
                            {XorGuidedTask::kTruth[pattern] ? 1.0 : 0.0},
                            cfg_.params.lrate);
            return;  // no reward concept in the supervised regime
        }

        if (rewarded) {
            ++metrics_.reward_events;
            ++metrics_.primary_rewards;
        }
        trace_xor(metrics_.presentations, pattern, fired_out, rewarded);

        if (cfg_.algo == Algo::Tap) {
            backprop_update(net_, acts,
                            tap_desired_pattern(net_, acts, rewarded, cfg_.params,
                                                streams_.learn),
                            cfg_.params.lrate);
        } else {  // tac: guided task, no reward output node
            const RewardSignal sig{rewarded, rewarded, rewarded ? 1.0 : 0.0};
            tac_update(net_, acts, sig, std::nullopt, cfg_.params, streams_.learn);
        }
        return;
    }

    if (!lagged_) {  // grid + tap: update within the same presentation
        const int cell = env_->target_cell();
        const Activations acts = forward(net_, encode_observation(cell));
        ++metrics_.presentations;
        const Action a = decode_action(motor_firing(net_, acts));
        const GridEnv::StepResult res = env_->step(a, streams_.env);
        const bool rewarded = res.rewarded && primary_enabled_;
        if (rewarded) {
            ++metrics_.reward_events;
            ++metrics_.primary_rewards;
        }
        trace_step(metrics_.presentations, cell, a, res.cell_after_move,
                   RewardSignal{rewarded, rewarded, rewarded ? 1.0 : 0.0});
        backprop_update(net_, acts,
                        tap_desired_pattern(net_, acts, rewarded, cfg_.params,
                                            streams_.learn),
                        cfg_.params.lrate);
        return;
    }

    // Lagged loop shared by tar and tac: the update for the acted-on
    // presentation happens only after the next input has been forwarded
    // through the still-unchanged weights, because the reward decision needs
    // the reward-node activation on that next input.
    const int cell = env_->target_cell();
    const Action a = decode_action(motor_firing(net_, pending_acts_));
    const GridEnv::StepResult res = env_->step(a, streams_.env);
    const Activations acts_next = forward(net_, encode_observation(env_->target_cell()));
    ++metrics_.presentations;

    // Disabling the reward removes the reward condition wholesale: the
    // conditioned signal is a proxy for the environment reward, so with the
    // latter gone every presentation is treated as punished.
    const RewardSignal sig =
        primary_enabled_
            ? tar_reward(res.rewarded,
                         acts_next[out][tar_cfg_->reward_node_index], cfg_.params)
            : RewardSignal{false, false, 0.0};
    if (sig.rewarded) ++metrics_.reward_events;
    if (sig.primary) ++metrics_.primary_rewards;
    trace_step(metrics_.presentations - 1, cell, a, res.cell_after_move, sig);

    if (cfg_.algo == Algo::Tar) {
        backprop_update(net_, pending_acts_,
                        tar_desired_pattern(net_, pending_acts_, *tar_cfg_, sig,
                                            cfg_.params, streams_.learn),
                        cfg_.params.lrate);
    } else {
        tac_update(net_, pending_acts_, sig, tar_cfg_, cfg_.params, streams_.learn);
    }
    pending_acts_ = acts_next;
}

void Trial::probe() {
    if (cfg_.task == Task::Xor) {
        converged_now_ = xor_solved();
        return;
    }

    bool all = true;
    for (int cell : required_cells()) {
        const Rollout r = greedy_rollout(cell);
        const bool learnt = r.success && r.motors_mature;
        cell_learnt_now_[static_cast<std::size_t>(cell)] = learnt;
        auto& outcome = metrics_.cells[static_cast<std::size_t>(cell)];
        if (learnt && outcome.first_learnt_at < 0)
            outcome.first_learnt_at = metrics_.presentations;
        all = all && learnt;
    }
    converged_now_ = all;

    if (tar_cfg_) {
        for (int cell = 0; cell < 9; ++cell) {
            auto& at = metrics_.breadcrumb_at[static_cast<std::size_t>(cell)];
            if (at < 0 && reward_node_activation(cell) > cfg_.params.reward_threshold)
                at = metrics_.presentations;
        }
    }
}

void Trial::finalize() {
    for (int c = 0; c < 9; ++c)
        metrics_.cells[static_cast<std::size_t>(c)].learnt =
            cell_learnt_now_[static_cast<std::size_t>(c)];

    if (cfg_.task == Task::Xor) {
        metrics_.final_outputs = xor_outputs();
    } else {
        for (int cell = 0; cell < 9; ++cell) {
            const Activations acts = forward(net_, encode_observation(cell));
            metrics_.policy[static_cast<std::size_t>(cell)] =
                action_name(decode_action(motor_firing(net_, acts)));
            if (tar_cfg_)
                metrics_.reward_node_final[static_cast<std::size_t>(cell)] =
                    acts.back()[tar_cfg_->reward_node_index];
        }
    }

    if (!cfg_.save_weights_path.empty()) save_weights(net_, cfg_.save_weights_path);
}

void Trial::run() {
    const auto start = std::chrono::steady_clock::now();
    const long long cap = static_cast<long long>(cfg_.max_presentations);
    const long long interval = static_cast<long long>(cfg_.probe_interval);

    if (lagged_ && !have_pending_) {
        prime();
        if (metrics_.presentations % interval == 0) probe();
    }
    while (metrics_.presentations < cap && !converged_now_) {
        step();
        if (metrics_.presentations % interval == 0) probe();
    }
    if (metrics_.presentations % interval != 0) probe();

    metrics_.converged = converged_now_;
    finalize();
    metrics_.wall_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void Trial::continue_run(std::size_t extra, bool primary_enabled) {
    const auto start = std::chrono::steady_clock::now();
    primary_enabled_ = primary_enabled;
    const long long target =
        metrics_.presentations + static_cast<long long>(extra);
    const long long interval = static_cast<long long>(cfg_.probe_interval);

    if (lagged_ && !have_pending_) prime();
    while (metrics_.presentations < target) {
        step();
        if (metrics_.presentations % interval == 0) probe();
    }
    if (metrics_.presentations % interval != 0) probe();

    metrics_.converged = converged_now_;
    finalize();
    metrics_.wall_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SweepReport multi_seed(const ExperimentConfig& cfg) {
    const std::size_t n = cfg.n_seeds;
    std::vector<TrialMetrics> per(n);

    auto run_one = [&cfg, &per](std::size_t i) {
        ExperimentConfig c = cfg;
        c.seed = cfg.seed + i;
        c.n_seeds = 1;
        // per-seed file outputs get a suffix so parallel runs never collide
        const std::string suffix = ".seed" + std::to_string(c.seed);
        if (!c.save_weights_path.empty()) c.save_weights_path += suffix;
        if (!c.trace_path.empty()) c.trace_path += suffix;
        Trial t(c);
        t.run();
        per[i] = t.metrics();
    };

    if (cfg.jobs > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(cfg.jobs)
#endif
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            run_one(static_cast<std::size_t>(i));
    } else {
        // serial reference path; must produce the identical report
        for (std::size_t i = 0; i < n; ++i) run_one(i);
    }

    SweepReport report;
    report.per_seed = std::move(per);
    std::vector<long long> converged;
    for (const TrialMetrics& m : report.per_seed)
        if (m.converged) converged.push_back(m.presentations);
    report.converged_count = converged.size();
    report.success_rate = n == 0 ? 0.0 : static_cast<double>(converged.size()) / n;
    if (!converged.empty()) {
        std::sort(converged.begin(), converged.end());
        const std::size_t mid = converged.size() / 2;
        report.median_presentations =
            converged.size() % 2 == 1
                ? static_cast<double>(converged[mid])
                : (static_cast<double>(converged[mid - 1]) +
                   static_cast<double>(converged[mid])) / 2.0;
        report.min_presentations = converged.front();
        report.max_presentations = converged.back();
    }
    return report;
}

namespace {

ordered_json metrics_to_json(const TrialMetrics& m) {
    ordered_json j;
    j["schema"] = "tanet-metrics-v1";
    j["task"] = m.task;
    j["algo"] = m.algo;
    j["seed"] = m.seed;
    j["converged"] = m.converged;
    j["presentations"] = m.presentations;
    j["cap"] = m.cap;
    j["reward_events"] = m.reward_events;
    j["primary_rewards"] = m.primary_rewards;
    if (m.task == "xor") {
        j["outputs"] = m.final_outputs;
    } else {
        ordered_json cells = ordered_json::array();
        for (const CellOutcome& c : m.cells)
            cells.push_back({{"learnt", c.learnt}, {"first_learnt_at", c.first_learnt_at}});
        j["cells"] = std::move(cells);
        j["policy"] = m.policy;
        if (m.algo == "tar" || m.algo == "tac") {
            j["breadcrumbs"] = m.breadcrumb_at;
            j["reward_node"] = m.reward_node_final;
        }
    }
    return j;
}

}  // namespace

std::string summary_json(const TrialMetrics& m) { return metrics_to_json(m).dump(2); }

std::string sweep_json(const SweepReport& r) {
    ordered_json j;
    j["schema"] = "tanet-sweep-v1";
    j["n_seeds"] = r.per_seed.size();
    j["converged"] = r.converged_count;
    j["success_rate"] = r.success_rate;
    ordered_json pres;
    if (r.converged_count > 0) {
        pres["median"] = r.median_presentations;
        pres["min"] = r.min_presentations;
        pres["max"] = r.max_presentations;
    } else {
        pres["median"] = nullptr;
        pres["min"] = nullptr;
        pres["max"] = nullptr;
    }
    j["presentations"] = std::move(pres);
    ordered_json per = ordered_json::array();
    for (const TrialMetrics& m : r.per_seed) per.push_back(metrics_to_json(m));
    j["per_seed"] = std::move(per);
    return j.dump(2);
}

std::optional<TrialMetrics> run_experiment(ExperimentConfig cfg, std::string& error) {
    apply_defaults(cfg);
    error = validate(cfg);
    if (!error.empty()) return std::nullopt;
    Trial t(cfg);
    t.run();
    return t.metrics();
}

}  // namespace tanet
