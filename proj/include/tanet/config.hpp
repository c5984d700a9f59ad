#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tanet/params.hpp"

namespace tanet {

enum class Task { Tracking, Maze, Xor };
enum class Algo { Supervised, Tap, Tar, Tac };

const char* task_name(Task t);
const char* algo_name(Algo a);
bool parse_task(const std::string& s, Task& out);
bool parse_algo(const std::string& s, Algo& out);

enum class TraceLevel { Off, Rewards, Full };

// One experiment: a (task, algorithm) pairing plus everything needed to
// reproduce it exactly from the seed.
struct ExperimentConfig {
    Task task = Task::Xor;
    Algo algo = Algo::Supervised;
    std::uint64_t seed = 1;
    std::size_t n_seeds = 1;  // sweep width; seeds run seed, seed+1, ...
    int jobs = 1;             // sweep parallelism; 1 keeps the serial reference path

    std::size_t max_presentations = 0;  // 0 -> preset default
    std::size_t probe_interval = 0;     // 0 -> preset default
    std::vector<std::size_t> layer_sizes;  // empty -> preset default

    LearningParams params;
    bool disable_primary_reward = false;  // extinction runs

    std::string load_weights_path;
    std::string save_weights_path;
    std::string trace_path;
    TraceLevel trace_level = TraceLevel::Off;
    std::string out_path;  // summary document; empty -> stdout
};

// Fills in the per-preset defaults (layer sizes, caps, probe cadence) for
// fields left at their zero values.
void apply_defaults(ExperimentConfig& cfg);

// Returns an empty string when the config is runnable, otherwise a message
// describing the first problem found. Callers treat a non-empty result as a
// configuration error (exit code 3), distinct from a non-converged run.
std::string validate(const ExperimentConfig& cfg);

}  // namespace tanet
