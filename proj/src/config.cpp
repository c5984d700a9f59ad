#include "tanet/config.hpp"

#include <sstream>

namespace tanet {

const char* task_name(Task t) {
    switch (t) {
        case Task::Tracking: return "tracking";
        case Task::Maze: return "maze";
        case Task::Xor: return "xor";
    }
    return "?";
}

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::Supervised: return "supervised";
        case Algo::Tap: return "tap";
        case Algo::Tar: return "tar";
        case Algo::Tac: return "tac";
    }
    return "?";
}

bool parse_task(const std::string& s, Task& out) {
    if (s == "tracking") out = Task::Tracking;
    else if (s == "maze") out = Task::Maze;
    else if (s == "xor") out = Task::Xor;
    else return false;
    return true;
}

bool parse_algo(const std::string& s, Algo& out) {
    if (s == "supervised") out = Algo::Supervised;
    else if (s == "tap") out = Algo::Tap;
    else if (s == "tar") out = Algo::Tar;
    else if (s == "tac") out = Algo::Tac;
    else return false;
    return true;
}

void apply_defaults(ExperimentConfig& cfg) {
    const bool grid = cfg.task != Task::Xor;

    if (cfg.layer_sizes.empty()) {
        if (!grid)
            cfg.layer_sizes = {2, 3, 1};
        else if (cfg.algo == Algo::Tar || cfg.algo == Algo::Tac)
            cfg.layer_sizes = {9, 12, 5};  // four motors + reward node
        else
            cfg.layer_sizes = {9, 12, 4};
    }

    if (cfg.max_presentations == 0) {
        if (cfg.task == Task::Xor)
            cfg.max_presentations = cfg.algo == Algo::Tap ? 200000 : 50000;
        else if (cfg.task == Task::Maze)
            cfg.max_presentations = cfg.algo == Algo::Tac ? 200000 : 800000;
        else  // tracking
            cfg.max_presentations = cfg.algo == Algo::Tap ? 1200000 : 1100000;
    }

    if (cfg.probe_interval == 0) {
        if (cfg.task == Task::Xor) cfg.probe_interval = 1;
        else if (cfg.task == Task::Maze) cfg.probe_interval = 50;
        else cfg.probe_interval = 100;
    }
}

std::string validate(const ExperimentConfig& cfg) {
    const bool grid = cfg.task != Task::Xor;

    if (cfg.algo == Algo::Supervised && cfg.task != Task::Xor)
        return "supervised training needs the labeled xor dataset; grid tasks have none";
    if (cfg.algo == Algo::Tar && !grid)
        return "tar needs a grid task: the guided xor setup has no reward output node";

    if (cfg.layer_sizes.size() < 2) return "need at least an input and an output layer";
    for (std::size_t n : cfg.layer_sizes)
        if (n == 0) return "layer sizes must be positive";

    const std::size_t want_in = grid ? 9 : 2;
    if (cfg.layer_sizes.front() != want_in) {
        std::ostringstream msg;
        msg << task_name(cfg.task) << " task needs " << want_in
            << " input nodes, got " << cfg.layer_sizes.front();
        return msg.str();
    }
    std::size_t want_out;
    if (!grid) want_out = 1;
    else if (cfg.algo == Algo::Tar || cfg.algo == Algo::Tac) want_out = 5;
    else want_out = 4;
    if (cfg.layer_sizes.back() != want_out) {
        std::ostringstream msg;
        msg << task_name(cfg.task) << "+" << algo_name(cfg.algo) << " needs "
            << want_out << " output nodes, got " << cfg.layer_sizes.back();
        return msg.str();
    }

    const LearningParams& p = cfg.params;
    if (p.lrate <= 0.0) return "learning rate must be positive";
    if (p.gamma <= 0.0 || p.gamma > 1.0) return "gamma must be in (0, 1]";
    if (p.reward_threshold <= 0.0 || p.reward_threshold >= 1.0)
        return "reward threshold must be in (0, 1)";
    // the documented wide variant [0, 1] is admitted alongside the default
    // moderate band
    if (p.punish_lo < 0.0 || p.punish_hi > 1.0 || p.punish_lo > p.punish_hi)
        return "punish range must satisfy 0 <= lo <= hi <= 1";
    if (p.mature_lo >= p.mature_hi || p.mature_lo <= 0.0 || p.mature_hi >= 1.0)
        return "maturity band must satisfy 0 < lo < hi < 1";
    if (p.init_half_width < 0.0) return "init half width must be non-negative";

    if (cfg.max_presentations == 0) return "max presentations must be positive";
    if (cfg.probe_interval == 0) return "probe interval must be positive";
    if (cfg.n_seeds == 0) return "need at least one seed";
    if (cfg.jobs < 1) return "jobs must be at least 1";
    if (cfg.trace_level != TraceLevel::Off && cfg.trace_path.empty())
        return "trace level set but no trace path given";
    return "";
}

}  // namespace tanet
