#pragma once

#include <string>

#include "tanet/network.hpp"

namespace tanet {

// Versioned text format for network state. Doubles are written with 17
// significant digits so a save/load round trip reproduces every weight
// bit for bit.
void save_weights(const Network& net, const std::string& path);

// Throws std::runtime_error on unreadable files, bad headers or shape
// mismatches.
Network load_weights(const std::string& path);

}  // namespace tanet
