#pragma once

#include <optional>
#include <vector>

#include "tanet/network.hpp"
#include "tanet/params.hpp"
#include "tanet/rng.hpp"

namespace tanet {

// Desired activation for a postsynaptic node as seen through one incoming
// connection. The presynaptic gate comes first: if the presynaptic node did
// not fire, the desired activation stays at the actual activation (zero
// delta for that connection). Otherwise a rewarded step amplifies the
// node's own response to 1/0 and a punished step draws a random moderate
// value.
double tac_desired(double a_u, double a_h, double theta_u, double theta_h,
                   bool rewarded, const LearningParams& params, Rng& rng);

// One applied weight change, recorded so tests can recompute the update
// from purely local quantities.
struct TacTraceRecord {
    std::size_t layer;  // connection goes from layer -> layer+1
    std::size_t u;      // postsynaptic node
    std::size_t h;      // presynaptic node; h == layer size means the bias
    double a_h;
    double a_u;
    double d_u;
    double applied;     // weight increment actually written
};

// Local update over every non-input node: no error term ever crosses a
// layer boundary. One desired value is drawn per node per step (the
// punishment draw is shared by all of that node's connections); a
// connection is touched only when its presynaptic node fired. Bias inputs
// are fixed at 1, so bias weights are always eligible. With a TarConfig the
// reward output node takes the discount-rule desired value instead.
void tac_update(Network& net, const Activations& acts, const RewardSignal& sig,
                const std::optional<TarConfig>& tar_cfg, const LearningParams& params,
                Rng& rng, std::vector<TacTraceRecord>* trace = nullptr);

}  // namespace tanet
