#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tanet/config.hpp"
#include "tanet/env.hpp"
#include "tanet/network.hpp"
#include "tanet/params.hpp"
#include "tanet/rng.hpp"

namespace tanet {

struct CellOutcome {
    bool learnt = false;             // state at the final probe
    long long first_learnt_at = -1;  // presentation count of the first successful probe
};

// Everything one run reports. Wall-clock time lives here for operator
// feedback but is deliberately left out of the serialized summary so that
// identical (config, seed) pairs produce identical bytes.
struct TrialMetrics {
    std::string task;
    std::string algo;
    std::uint64_t seed = 0;
    bool converged = false;
    long long presentations = 0;
    long long cap = 0;
    long long reward_events = 0;    // rewarded steps, primary or conditioned
    long long primary_rewards = 0;  // world payouts only

    // grid tasks
    std::array<CellOutcome, 9> cells{};
    std::array<long long, 9> breadcrumb_at{};      // first presentation with a
                                                   // conditioned reward marker; -1
    std::array<double, 9> reward_node_final{};     // reward-node activation per cell
    std::array<std::string, 9> policy{};           // greedy action per start cell

    // xor
    std::vector<double> final_outputs;  // output activation per pattern

    double wall_seconds = 0.0;
};

// One seeded run, kept stepwise so callers can pause it, inspect the
// network, and resume — the extinction experiment needs exactly that.
class Trial {
public:
    explicit Trial(const ExperimentConfig& cfg);  // cfg must be defaulted + validated
    ~Trial();
    Trial(Trial&&) noexcept;
    Trial& operator=(Trial&&) noexcept;

    // Runs until the convergence probe succeeds or the cap is reached.
    void run();

    // Runs exactly `extra` more presentations (no early stop). With
    // primary_enabled false the reward condition is removed outright —
    // every presentation is treated as punished, the conditioned proxy
    // included, since it stands in for the world payout. This is the
    // extinction setup.
    void continue_run(std::size_t extra, bool primary_enabled);

    const TrialMetrics& metrics() const { return metrics_; }
    const Network& network() const { return net_; }

    // Deterministic probes; none of these consume randomness or touch
    // training state.
    struct Rollout {
        bool success = false;
        bool motors_mature = false;
        std::vector<int> path;  // visited cells, starting cell included
    };
    Rollout greedy_rollout(int start_cell) const;
    std::vector<double> outputs_for_cell(int cell) const;  // grid: output layer
    double reward_node_activation(int cell) const;
    bool xor_solved() const;
    std::vector<double> xor_outputs() const;  // one output activation per pattern

private:
    void prime();           // first presentation for the lagged schemes
    void step();            // one presentation
    void probe();           // convergence check + per-cell bookkeeping
    void finalize();        // policy map, final outputs, save-weights
    std::vector<int> required_cells() const;
    void trace_step(long long n, int cell, Action a, int moved_to,
                    const RewardSignal& sig);
    void trace_xor(long long n, std::size_t pattern, bool fired_out, bool rewarded);

    ExperimentConfig cfg_;
    RngStreams streams_;
    Network net_;
    std::optional<GridEnv> env_;
    XorGuidedTask xor_task_;
    std::optional<TarConfig> tar_cfg_;
    bool primary_enabled_ = true;
    bool lagged_ = false;        // tar/tac grid loops update one step behind
    Activations pending_acts_;   // activations awaiting their lagged update
    bool have_pending_ = false;
    TrialMetrics metrics_;
    bool converged_now_ = false;
    std::array<bool, 9> cell_learnt_now_{};
    std::unique_ptr<std::ofstream> trace_;
};

// Aggregate over cfg.n_seeds runs with seeds cfg.seed + 0 .. n-1. With
// cfg.jobs > 1 the seeds run under OpenMP; results are reduced in seed
// order either way, so the report is identical to the serial one.
struct SweepReport {
    std::vector<TrialMetrics> per_seed;
    std::size_t converged_count = 0;
    double success_rate = 0.0;
    double median_presentations = -1.0;  // over converged runs; -1 when none
    long long min_presentations = -1;
    long long max_presentations = -1;
};

SweepReport multi_seed(const ExperimentConfig& cfg);

// Deterministic serialized summaries (wall-clock excluded by design).
std::string summary_json(const TrialMetrics& m);
std::string sweep_json(const SweepReport& r);

// Convenience wrapper: defaults + validation + run. Returns the metrics, or
// the validation message through `error`.
std::optional<TrialMetrics> run_experiment(ExperimentConfig cfg, std::string& error);

}  // namespace tanet
