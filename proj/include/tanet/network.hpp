#pragma once

#include <cstddef>
#include <vector>

#include "tanet/rng.hpp"

namespace tanet {

// Activations for every layer after one forward pass; index 0 is a copy of
// the input pattern. Step loops that need two consecutive presentations at
// once keep two of these and rotate them.
using Activations = std::vector<std::vector<double>>;

// Fully connected feedforward network of logistic units.
//
// weight[l][u][h] connects node h in layer l to node u in layer l+1.
// Every non-input node u has an exclusive bias weight bias[l][u]; the bias
// input is fixed at 1. threshold[l][u] is the firing threshold of node u in
// layer l (inputs included: their threshold acts as a presynaptic gate for
// learning rules that care about presynaptic firing).
struct Network {
    std::vector<std::size_t> layer_sizes;
    std::vector<std::vector<std::vector<double>>> weight;
    std::vector<std::vector<double>> bias;
    std::vector<std::vector<double>> threshold;

    static Network make(const std::vector<std::size_t>& sizes,
                        double init_half_width, Rng& rng);

    std::size_t layer_count() const { return layer_sizes.size(); }
    std::size_t output_size() const { return layer_sizes.back(); }
};

double logistic(double x);

inline bool fired(double activation, double threshold) {
    return activation > threshold;
}

// An activation is mature once it leaves the (lo, hi) band; responses inside
// the band are still undecided and count as unlearnt.
inline bool mature(double activation, double lo = 0.1, double hi = 0.9) {
    return activation > hi || activation < lo;
}

Activations forward(const Network& net, const std::vector<double>& input);

}  // namespace tanet
