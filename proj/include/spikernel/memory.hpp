#pragma once

// Parameter counting and memory footprint under 32-bit weights.

#include <cstdint>
#include <string>
#include <vector>

#include "spikernel/macro.hpp"

namespace spikernel {

struct LayerParams {
    std::string name;
    int64_t n_w = 0;
    int64_t n_b = 0;
};

struct MemoryReport {
    std::vector<LayerParams> layers;
    int64_t total = 0;          // sum of n_w + n_b over all layers
    int64_t bytes = 0;          // total * 4, 32-bit weights, no padding
};

// Weight and bias counts for one layer: n_w = h1*h2*c*r, n_b = r if biased.
// Throws ValidationError on non-positive dims.
std::pair<int64_t, int64_t> conv_params(int h1, int h2, int c, int r, bool bias);

// Sums conv_params over every trainable layer of the architecture.
// Zeroize/SkipCon/AvgPool edges contribute nothing (they never appear in
// arch.convs).
MemoryReport network_params(const NetworkArchitecture& arch);

}  // namespace spikernel
