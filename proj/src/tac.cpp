#include "tanet/tac.hpp"

#include <stdexcept>

#include "tanet/tar.hpp"

namespace tanet {

double tac_desired(double a_u, double a_h, double theta_u, double theta_h,
                   bool rewarded, const LearningParams& params, Rng& rng) {
    if (!fired(a_h, theta_h)) return a_u;
    if (rewarded) return fired(a_u, theta_u) ? 1.0 : 0.0;
    return rng.uniform(params.punish_lo, params.punish_hi);
}

void tac_update(Network& net, const Activations& acts, const RewardSignal& sig,
                const std::optional<TarConfig>& tar_cfg, const LearningParams& params,
                Rng& rng, std::vector<TacTraceRecord>* trace) {
    const std::size_t layers = net.layer_sizes.size();
    if (acts.size() != layers) throw std::invalid_argument("activation shape mismatch");
    if (tar_cfg && tar_cfg->reward_node_index >= net.output_size())
        throw std::invalid_argument("reward node index out of range");

    // Node order (layer ascending, node ascending) fixes the punishment
    // draw sequence, which keeps runs reproducible.
    for (std::size_t l = 0; l + 1 < layers; ++l) {
        const bool output_layer = (l + 2 == layers);
        for (std::size_t u = 0; u < net.layer_sizes[l + 1]; ++u) {
            const double a_u = acts[l + 1][u];

            double d_u;
            if (output_layer && tar_cfg && u == tar_cfg->reward_node_index) {
                d_u = tar_reward_node_desired(sig, params);
            } else if (sig.rewarded) {
                d_u = fired(a_u, net.threshold[l + 1][u]) ? 1.0 : 0.0;
            } else {
                d_u = rng.uniform(params.punish_lo, params.punish_hi);
            }

            const double delta = (d_u - a_u) * a_u * (1.0 - a_u);
            const double step = params.lrate * delta;

            for (std::size_t h = 0; h < net.layer_sizes[l]; ++h) {
                if (!fired(acts[l][h], net.threshold[l][h])) continue;
                const double inc = step * acts[l][h];
                net.weight[l][u][h] += inc;
                if (trace)
                    trace->push_back({l, u, h, acts[l][h], a_u, d_u, inc});
            }
            // bias input is constant 1: always above threshold
            net.bias[l][u] += step;
            if (trace)
                trace->push_back({l, u, net.layer_sizes[l], 1.0, a_u, d_u, step});
        }
    }
}

}  // namespace tanet
