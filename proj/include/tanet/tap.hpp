#pragma once

#include <vector>

#include "tanet/network.hpp"
#include "tanet/params.hpp"
#include "tanet/rng.hpp"

namespace tanet {

// Desired activation for one output node. On a rewarded step the node's own
// response is amplified: 1 if it fired, 0 if it did not. On a punished step
// the desired value is a random moderate draw that drags the response back
// toward the threshold, so the next presentations can explore a different
// candidate behavior.
double tap_desired(double activation, double threshold, bool rewarded,
                   const LearningParams& params, Rng& rng);

// Desired pattern over the whole output layer; one draw per node on
// punished steps, in node order.
std::vector<double> tap_desired_pattern(const Network& net, const Activations& acts,
                                        bool rewarded, const LearningParams& params,
                                        Rng& rng);

}  // namespace tanet
