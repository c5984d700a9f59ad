#pragma once

#include <cstddef>

namespace tanet {

// Knobs shared by every learning scheme. Defaults match the reference
// experiment configuration.
struct LearningParams {
    double lrate = 1.0;
    double gamma = 0.95;            // discount applied to a conditioned reward value
    double reward_threshold = 0.8;  // reward-node activation that counts as a reward
    double punish_lo = 0.45;        // desired-activation range drawn on punished steps
    double punish_hi = 0.55;
    double mature_lo = 0.1;         // activations outside (lo, hi) count as mature
    double mature_hi = 0.9;
    double init_half_width = 0.5;   // weights start uniform in [-w, w]
};

// Outcome of one step as seen by the learning rules. A primary reward is
// paid by the world itself; a conditioned reward is triggered by the
// network's own reward-node activation on the following input. When both
// occur at once the primary reward wins.
struct RewardSignal {
    bool rewarded = false;
    bool primary = false;
    double value = 0.0;  // 1.0 for primary, the reward-node activation for conditioned
};

// Placement of the non-motor reward node within the output layer.
struct TarConfig {
    std::size_t reward_node_index = 4;
};

}  // namespace tanet
