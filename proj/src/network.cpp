#include "tanet/network.hpp"

#include <cmath>
#include <stdexcept>

namespace tanet {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

Network Network::make(const std::vector<std::size_t>& sizes,
                      double init_half_width, Rng& rng) {
    if (sizes.size() < 2) throw std::invalid_argument("need at least two layers");
    for (std::size_t n : sizes)
        if (n == 0) throw std::invalid_argument("empty layer");

    Network net;
    net.layer_sizes = sizes;
    net.weight.resize(sizes.size() - 1);
    net.bias.resize(sizes.size() - 1);
    net.threshold.resize(sizes.size());
    for (std::size_t l = 0; l < sizes.size(); ++l)
        net.threshold[l].assign(sizes[l], 0.5);

    // Draw order is part of the contract: layer by layer, node by node,
    // incoming weights in presynaptic order, then the node's bias. Paired
    // experiments rely on two algorithms seeing identical initial weights
    // from the same seed.
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        net.weight[l].resize(sizes[l + 1]);
        net.bias[l].resize(sizes[l + 1]);
        for (std::size_t u = 0; u < sizes[l + 1]; ++u) {
            net.weight[l][u].resize(sizes[l]);
            for (std::size_t h = 0; h < sizes[l]; ++h)
                net.weight[l][u][h] = rng.uniform(-init_half_width, init_half_width);
            net.bias[l][u] = rng.uniform(-init_half_width, init_half_width);
        }
    }
    return net;
}

Activations forward(const Network& net, const std::vector<double>& input) {
    if (input.size() != net.layer_sizes.front())
        throw std::invalid_argument("input size mismatch");

    Activations acts(net.layer_sizes.size());
    acts[0] = input;
    for (std::size_t l = 0; l + 1 < net.layer_sizes.size(); ++l) {
        acts[l + 1].resize(net.layer_sizes[l + 1]);
        for (std::size_t u = 0; u < net.layer_sizes[l + 1]; ++u) {
            double netinput = 0.0;
            for (std::size_t h = 0; h < net.layer_sizes[l]; ++h)
                netinput += net.weight[l][u][h] * acts[l][h];
            netinput += net.bias[l][u];
            acts[l + 1][u] = logistic(netinput);
        }
    }
    return acts;
}

}  // namespace tanet
