#include "tanet/tar.hpp"

#include <stdexcept>

#include "tanet/tap.hpp"

namespace tanet {

RewardSignal tar_reward(bool primary_reward, double reward_node_next,
                        const LearningParams& params) {
    if (primary_reward) return RewardSignal{true, true, 1.0};
    if (reward_node_next > params.reward_threshold)
        return RewardSignal{true, false, reward_node_next};
    return RewardSignal{false, false, 0.0};
}

double tar_reward_node_desired(const RewardSignal& sig, const LearningParams& params) {
    return sig.rewarded ? params.gamma * sig.value : 0.0;
}

std::vector<double> tar_desired_pattern(const Network& net, const Activations& acts,
                                        const TarConfig& cfg, const RewardSignal& sig,
                                        const LearningParams& params, Rng& rng) {
    const std::size_t out = net.layer_sizes.size() - 1;
    if (cfg.reward_node_index >= net.output_size())
        throw std::invalid_argument("reward node index out of range");

    std::vector<double> desired(net.output_size());
    for (std::size_t u = 0; u < desired.size(); ++u) {
        if (u == cfg.reward_node_index)
            desired[u] = tar_reward_node_desired(sig, params);
        else
            desired[u] = tap_desired(acts[out][u], net.threshold[out][u],
                                     sig.rewarded, params, rng);
    }
    return desired;
}

}  // namespace tanet
