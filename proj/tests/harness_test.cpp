#include "tanet/harness.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "tanet/config.hpp"
#include "tanet/weights_io.hpp"

namespace tanet {
namespace {

ExperimentConfig base_cfg(Task task, Algo algo, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.task = task;
    cfg.algo = algo;
    cfg.seed = seed;
    apply_defaults(cfg);
    return cfg;
}

std::string tmp_path(const std::string& name) {
    return testing::TempDir() + "tanet_harness_" + name;
}

TEST(ApplyDefaults, PresetShapesAndCaps) {
    ExperimentConfig c1 = base_cfg(Task::Xor, Algo::Supervised, 1);
    EXPECT_EQ(c1.layer_sizes, (std::vector<std::size_t>{2, 3, 1}));
    EXPECT_EQ(c1.max_presentations, 50000u);

    ExperimentConfig c2 = base_cfg(Task::Xor, Algo::Tap, 1);
    EXPECT_EQ(c2.max_presentations, 200000u);

    ExperimentConfig c3 = base_cfg(Task::Xor, Algo::Tac, 1);
    EXPECT_EQ(c3.max_presentations, 50000u);

    ExperimentConfig c4 = base_cfg(Task::Tracking, Algo::Tap, 1);
    EXPECT_EQ(c4.layer_sizes, (std::vector<std::size_t>{9, 12, 4}));
    EXPECT_EQ(c4.max_presentations, 1200000u);

    ExperimentConfig c5 = base_cfg(Task::Tracking, Algo::Tar, 1);
    EXPECT_EQ(c5.layer_sizes, (std::vector<std::size_t>{9, 12, 5}));
    EXPECT_EQ(c5.max_presentations, 1100000u);

    ExperimentConfig c6 = base_cfg(Task::Maze, Algo::Tar, 1);
    EXPECT_EQ(c6.max_presentations, 800000u);

    ExperimentConfig c7 = base_cfg(Task::Maze, Algo::Tac, 1);
    EXPECT_EQ(c7.layer_sizes, (std::vector<std::size_t>{9, 12, 5}));
    EXPECT_EQ(c7.max_presentations, 200000u);
}

TEST(Validate, RejectsIncompatiblePairings) {
    ExperimentConfig cfg = base_cfg(Task::Tracking, Algo::Supervised, 1);
    EXPECT_FALSE(validate(cfg).empty());

    ExperimentConfig cfg2 = base_cfg(Task::Xor, Algo::Tar, 1);
    EXPECT_FALSE(validate(cfg2).empty());

    ExperimentConfig cfg3 = base_cfg(Task::Maze, Algo::Tar, 1);
    cfg3.layer_sizes = {9, 12, 4};  // missing the reward output node
    EXPECT_FALSE(validate(cfg3).empty());

    ExperimentConfig cfg4 = base_cfg(Task::Xor, Algo::Supervised, 1);
    cfg4.layer_sizes = {3, 3, 1};  // xor takes two inputs
    EXPECT_FALSE(validate(cfg4).empty());

    ExperimentConfig ok = base_cfg(Task::Maze, Algo::Tac, 1);
    EXPECT_TRUE(validate(ok).empty());
}

TEST(Validate, RejectsBadParameters) {
    ExperimentConfig cfg = base_cfg(Task::Xor, Algo::Tap, 1);
    cfg.params.lrate = 0.0;
    EXPECT_FALSE(validate(cfg).empty());

    cfg = base_cfg(Task::Xor, Algo::Tap, 1);
    cfg.params.gamma = 1.5;
    EXPECT_FALSE(validate(cfg).empty());

    cfg = base_cfg(Task::Xor, Algo::Tap, 1);
    cfg.params.punish_lo = 0.7;
    cfg.params.punish_hi = 0.3;
    EXPECT_FALSE(validate(cfg).empty());

    cfg = base_cfg(Task::Xor, Algo::Tap, 1);
    cfg.trace_level = TraceLevel::Full;  // no trace path
    EXPECT_FALSE(validate(cfg).empty());
}

TEST(RunExperiment, ConfigurationErrorBeforeAnyStepping) {
    ExperimentConfig cfg;
    cfg.task = Task::Tracking;
    cfg.algo = Algo::Supervised;
    std::string error;
    const auto metrics = run_experiment(cfg, error);
    EXPECT_FALSE(metrics.has_value());
    EXPECT_FALSE(error.empty());
}

// Identical (config, seed) must produce byte-identical summaries. This is
// the determinism acceptance property at the single-run level.
TEST(Determinism, RepeatedRunsSerializeIdentically) {
    for (auto [task, algo] : {std::pair{Task::Xor, Algo::Tap},
                              std::pair{Task::Xor, Algo::Supervised},
                              std::pair{Task::Maze, Algo::Tac}}) {
        ExperimentConfig cfg = base_cfg(task, algo, 7);
        cfg.max_presentations = 20000;

        Trial t1(cfg);
        t1.run();
        Trial t2(cfg);
        t2.run();
        EXPECT_EQ(summary_json(t1.metrics()), summary_json(t2.metrics()))
            << task_name(task) << "+" << algo_name(algo);
    }
}

TEST(Determinism, SerialAndParallelSweepsSerializeIdentically) {
    ExperimentConfig cfg = base_cfg(Task::Xor, Algo::Tap, 1);
    cfg.max_presentations = 30000;
    cfg.n_seeds = 6;

    cfg.jobs = 1;
    const SweepReport serial = multi_seed(cfg);
    cfg.jobs = 4;
    const SweepReport parallel = multi_seed(cfg);

    EXPECT_EQ(sweep_json(serial), sweep_json(parallel));
    EXPECT_EQ(serial.per_seed.size(), 6u);
}

TEST(SummaryJson, CarriesTheDocumentedFields) {
    ExperimentConfig cfg = base_cfg(Task::Maze, Algo::Tac, 3);
    cfg.max_presentations = 60000;
    Trial t(cfg);
    t.run();

    const nlohmann::json doc = nlohmann::json::parse(summary_json(t.metrics()));
    EXPECT_EQ(doc.at("schema"), "tanet-metrics-v1");
    EXPECT_EQ(doc.at("task"), "maze");
    EXPECT_EQ(doc.at("algo"), "tac");
    EXPECT_EQ(doc.at("seed"), 3);
    EXPECT_TRUE(doc.contains("converged"));
    EXPECT_TRUE(doc.contains("presentations"));
    EXPECT_TRUE(doc.contains("cells"));
    EXPECT_TRUE(doc.contains("policy"));
    EXPECT_TRUE(doc.contains("breadcrumbs"));
    EXPECT_TRUE(doc.contains("reward_node"));
    EXPECT_FALSE(doc.contains("wall_seconds"));  // excluded by design

    ExperimentConfig xcfg = base_cfg(Task::Xor, Algo::Supervised, 3);
    Trial xt(xcfg);
    xt.run();
    const nlohmann::json xdoc = nlohmann::json::parse(summary_json(xt.metrics()));
    EXPECT_TRUE(xdoc.contains("outputs"));
    EXPECT_FALSE(xdoc.contains("cells"));
}

TEST(SweepJson, AggregatesAreSeedOrderedAndComplete) {
    ExperimentConfig cfg = base_cfg(Task::Xor, Algo::Supervised, 10);
    cfg.n_seeds = 4;
    const SweepReport rep = multi_seed(cfg);

    const nlohmann::json doc = nlohmann::json::parse(sweep_json(rep));
    EXPECT_EQ(doc.at("schema"), "tanet-sweep-v1");
    ASSERT_EQ(doc.at("per_seed").size(), 4u);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_EQ(doc.at("per_seed")[i].at("seed"), 10 + i);
    EXPECT_TRUE(doc.contains("success_rate"));
    EXPECT_TRUE(doc.contains("median_presentations"));
}

TEST(MultiSeed, SingleSeedReducesToRunExperiment) {
    ExperimentConfig cfg = base_cfg(Task::Xor, Algo::Supervised, 5);
    cfg.n_seeds = 1;
    const SweepReport rep = multi_seed(cfg);
    ASSERT_EQ(rep.per_seed.size(), 1u);

    std::string error;
    const auto single = run_experiment(base_cfg(Task::Xor, Algo::Supervised, 5), error);
    ASSERT_TRUE(single.has_value());
    EXPECT_EQ(summary_json(rep.per_seed[0]), summary_json(*single));
}

// The documented save/load workflow: a supervised solution saved to disk
// and reloaded into the reward-driven variant starts out already solved,
// because the probe is a pure function of the weights.
TEST(WeightsWorkflow, SupervisedSolutionResumesConvergedUnderTap) {
    const std::string wpath = tmp_path("xor_solution.txt");

    ExperimentConfig train = base_cfg(Task::Xor, Algo::Supervised, 2);
    train.save_weights_path = wpath;
    Trial t(train);
    t.run();
    ASSERT_TRUE(t.metrics().converged);

    ExperimentConfig resume = base_cfg(Task::Xor, Algo::Tap, 2);
    resume.load_weights_path = wpath;
    Trial r(resume);
    r.run();
    EXPECT_TRUE(r.metrics().converged);
    // converged on the very first probe: one presentation, nothing relearned
    EXPECT_EQ(r.metrics().presentations, 1);
    std::remove(wpath.c_str());
}

TEST(WeightsWorkflow, ShapeMismatchIsRejectedAtConstruction) {
    const std::string wpath = tmp_path("wrong_shape.txt");
    ExperimentConfig train = base_cfg(Task::Xor, Algo::Supervised, 2);
    train.max_presentations = 10;
    train.save_weights_path = wpath;
    Trial t(train);
    t.run();

    ExperimentConfig resume = base_cfg(Task::Maze, Algo::Tac, 2);
    resume.load_weights_path = wpath;  // 2-3-1 file into a 9-12-5 preset
    EXPECT_THROW(Trial{resume}, std::runtime_error);
    std::remove(wpath.c_str());
}

TEST(ContinueRun, RunsExactlyTheRequestedPresentations) {
    ExperimentConfig cfg = base_cfg(Task::Maze, Algo::Tar, 1);
    cfg.max_presentations = 5000;  // well under convergence
    Trial t(cfg);
    t.run();
    const long long before = t.metrics().presentations;
    t.continue_run(1234, true);
    EXPECT_EQ(t.metrics().presentations, before + 1234);
}

TEST(Probes, GreedyRolloutDoesNotPerturbTraining) {
    ExperimentConfig cfg = base_cfg(Task::Maze, Algo::Tac, 4);
    cfg.max_presentations = 30000;
    Trial a(cfg);
    a.run();
    const std::string before = summary_json(a.metrics());
    // hammer the probes; the summary must not move
    for (int i = 0; i < 50; ++i) {
        (void)a.greedy_rollout(3);
        (void)a.outputs_for_cell(i % 9);
        (void)a.reward_node_activation(i % 9);
    }
    EXPECT_EQ(summary_json(a.metrics()), before);
}

TEST(Trace, FullTraceEmitsParseableRecords) {
    const std::string tpath = tmp_path("trace.jsonl");
    ExperimentConfig cfg = base_cfg(Task::Xor, Algo::Tap, 1);
    cfg.max_presentations = 50;
    cfg.trace_path = tpath;
    cfg.trace_level = TraceLevel::Full;
    ASSERT_TRUE(validate(cfg).empty());
    Trial t(cfg);
    t.run();

    std::ifstream in(tpath);
    ASSERT_TRUE(in.good());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        const nlohmann::json rec = nlohmann::json::parse(line);
        EXPECT_TRUE(rec.contains("n"));
        EXPECT_TRUE(rec.contains("pattern"));
        EXPECT_TRUE(rec.contains("rewarded"));
        ++lines;
    }
    EXPECT_EQ(lines, 50);
    std::remove(tpath.c_str());
}

TEST(RewardNodeProbe, RefusesAlgosWithoutRewardNode) {
    ExperimentConfig cfg = base_cfg(Task::Tracking, Algo::Tap, 1);
    cfg.max_presentations = 100;
    Trial t(cfg);
    t.run();
    EXPECT_THROW(t.reward_node_activation(0), std::logic_error);
}

}  // namespace
}  // namespace tanet
