#include "tanet/tap.hpp"

namespace tanet {

double tap_desired(double activation, double threshold, bool rewarded,
                   const LearningParams& params, Rng& rng) {
    if (rewarded) return fired(activation, threshold) ? 1.0 : 0.0;
    return rng.uniform(params.punish_lo, params.punish_hi);
}

std::vector<double> tap_desired_pattern(const Network& net, const Activations& acts,
                                        bool rewarded, const LearningParams& params,
                                        Rng& rng) {
    const std::size_t out = net.layer_sizes.size() - 1;
    std::vector<double> desired(net.output_size());
    for (std::size_t u = 0; u < desired.size(); ++u)
        desired[u] = tap_desired(acts[out][u], net.threshold[out][u], rewarded,
                                 params, rng);
    return desired;
}

}  // namespace tanet
