#pragma once

#include <vector>

#include "tanet/network.hpp"

namespace tanet {

// Per-layer error terms for one online update toward a full desired output
// pattern. deltas[l][u] belongs to node u of layer l+1: the output layer
// gets (d - a) a (1 - a), hidden layers get a (1 - a) * sum of downstream
// delta * weight. All terms are computed against the frozen activations
// before anything is applied.
std::vector<std::vector<double>> backprop_deltas(const Network& net,
                                                 const Activations& acts,
                                                 const std::vector<double>& desired);

// weight[l][u][h] += lrate * deltas[l][u] * acts[l][h]; bias likewise with a
// fixed presynaptic activation of 1.
void apply_deltas(Network& net, const Activations& acts,
                  const std::vector<std::vector<double>>& deltas, double lrate);

void backprop_update(Network& net, const Activations& acts,
                     const std::vector<double>& desired, double lrate);

// Half squared error against a desired output pattern; the quantity the
// update above descends.
double output_loss(const Activations& acts, const std::vector<double>& desired);

}  // namespace tanet
