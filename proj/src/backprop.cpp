#include "tanet/backprop.hpp"

#include <stdexcept>

namespace tanet {

std::vector<std::vector<double>> backprop_deltas(const Network& net,
                                                 const Activations& acts,
                                                 const std::vector<double>& desired) {
    const std::size_t layers = net.layer_sizes.size();
    if (acts.size() != layers) throw std::invalid_argument("activation shape mismatch");
    if (desired.size() != net.output_size())
        throw std::invalid_argument("desired pattern size mismatch");

    std::vector<std::vector<double>> deltas(layers - 1);

    const std::size_t out = layers - 1;
    deltas[out - 1].resize(net.layer_sizes[out]);
    for (std::size_t u = 0; u < net.layer_sizes[out]; ++u) {
        const double a = acts[out][u];
        deltas[out - 1][u] = (desired[u] - a) * a * (1.0 - a);
    }

    for (std::size_t l = out - 1; l >= 1; --l) {
        deltas[l - 1].resize(net.layer_sizes[l]);
        for (std::size_t h = 0; h < net.layer_sizes[l]; ++h) {
            double sum = 0.0;
            for (std::size_t u = 0; u < net.layer_sizes[l + 1]; ++u)
                sum += deltas[l][u] * net.weight[l][u][h];
            const double a = acts[l][h];
            deltas[l - 1][h] = sum * a * (1.0 - a);
        }
    }
    return deltas;
}

void apply_deltas(Network& net, const Activations& acts,
                  const std::vector<std::vector<double>>& deltas, double lrate) {
    for (std::size_t l = 0; l + 1 < net.layer_sizes.size(); ++l) {
        for (std::size_t u = 0; u < net.layer_sizes[l + 1]; ++u) {
            const double step = lrate * deltas[l][u];
            for (std::size_t h = 0; h < net.layer_sizes[l]; ++h)
                net.weight[l][u][h] += step * acts[l][h];
            net.bias[l][u] += step;
        }
    }
}

void backprop_update(Network& net, const Activations& acts,
                     const std::vector<double>& desired, double lrate) {
    apply_deltas(net, acts, backprop_deltas(net, acts, desired), lrate);
}

double output_loss(const Activations& acts, const std::vector<double>& desired) {
    double loss = 0.0;
    const std::vector<double>& out = acts.back();
    for (std::size_t u = 0; u < out.size(); ++u) {
        const double e = desired[u] - out[u];
        loss += 0.5 * e * e;
    }
    return loss;
}

}  // namespace tanet
