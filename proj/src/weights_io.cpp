#include "tanet/weights_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tanet {

namespace {

constexpr const char* kMagic = "tanet-weights v1";

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw std::runtime_error("weights file '" + path + "': " + why);
}

}  // namespace

void save_weights(const Network& net, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(path, "cannot open for writing");

    out << kMagic << "\n";
    out << "layers";
    for (std::size_t n : net.layer_sizes) out << ' ' << n;
    out << "\n";
    for (std::size_t l = 0; l < net.layer_sizes.size(); ++l) {
        out << "threshold " << l;
        for (double t : net.threshold[l]) out << ' ' << fmt(t);
        out << "\n";
    }
    for (std::size_t l = 0; l + 1 < net.layer_sizes.size(); ++l) {
        out << "layer " << l << "\n";
        for (std::size_t u = 0; u < net.layer_sizes[l + 1]; ++u) {
            out << "node " << u;
            for (double w : net.weight[l][u]) out << ' ' << fmt(w);
            out << ' ' << fmt(net.bias[l][u]) << "\n";
        }
    }
    if (!out) fail(path, "write error");
}

Network load_weights(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open");

    std::string line;
    if (!std::getline(in, line) || line != kMagic) fail(path, "bad header");

    if (!std::getline(in, line)) fail(path, "missing layer sizes");
    std::istringstream sizes_line(line);
    std::string word;
    sizes_line >> word;
    if (word != "layers") fail(path, "missing layer sizes");
    std::vector<std::size_t> sizes;
    std::size_t n;
    while (sizes_line >> n) sizes.push_back(n);
    if (sizes.size() < 2) fail(path, "need at least two layers");

    Network net;
    net.layer_sizes = sizes;
    net.threshold.resize(sizes.size());
    net.weight.resize(sizes.size() - 1);
    net.bias.resize(sizes.size() - 1);

    for (std::size_t l = 0; l < sizes.size(); ++l) {
        if (!std::getline(in, line)) fail(path, "missing threshold row");
        std::istringstream row(line);
        std::size_t idx;
        if (!(row >> word >> idx) || word != "threshold" || idx != l)
            fail(path, "bad threshold row");
        net.threshold[l].resize(sizes[l]);
        for (std::size_t i = 0; i < sizes[l]; ++i)
            if (!(row >> net.threshold[l][i])) fail(path, "short threshold row");
    }

    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        if (!std::getline(in, line)) fail(path, "missing layer block");
        std::istringstream head(line);
        std::size_t idx;
        if (!(head >> word >> idx) || word != "layer" || idx != l)
            fail(path, "bad layer block header");
        net.weight[l].resize(sizes[l + 1]);
        net.bias[l].resize(sizes[l + 1]);
        for (std::size_t u = 0; u < sizes[l + 1]; ++u) {
            if (!std::getline(in, line)) fail(path, "missing node row");
            std::istringstream row(line);
            if (!(row >> word >> idx) || word != "node" || idx != u)
                fail(path, "bad node row");
            net.weight[l][u].resize(sizes[l]);
            for (std::size_t h = 0; h < sizes[l]; ++h)
                if (!(row >> net.weight[l][u][h])) fail(path, "short node row");
            if (!(row >> net.bias[l][u])) fail(path, "node row missing bias");
        }
    }
    return net;
}

}  // namespace tanet
