#pragma once

#include <vector>

#include "tanet/network.hpp"
#include "tanet/params.hpp"
#include "tanet/rng.hpp"

namespace tanet {

// Composite reward decision for one step. The world's own payout (primary)
// always wins; failing that, a sufficiently active reward node on the next
// input acts as a conditioned reward whose value is that activation itself.
RewardSignal tar_reward(bool primary_reward, double reward_node_next,
                        const LearningParams& params);

// Desired activation for the reward output node: the discounted reward
// value when rewarded, hard zero when punished. Chaining these discounts
// backwards is what lays a gradient of conditioned reinforcers from the
// goal toward the start.
double tar_reward_node_desired(const RewardSignal& sig, const LearningParams& params);

// Desired pattern over the whole output layer: motor nodes follow the
// amplify-or-randomize rule, the reward node follows the discount rule.
std::vector<double> tar_desired_pattern(const Network& net, const Activations& acts,
                                        const TarConfig& cfg, const RewardSignal& sig,
                                        const LearningParams& params, Rng& rng);

}  // namespace tanet
