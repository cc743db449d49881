#pragma once

// Macro-architecture: stem -> cell (stage 1) -> downsample -> cell (stage 2)
// -> global pooling -> classifier. Both cells share one genotype.

#include <array>
#include <string>
#include <vector>

#include "spikernel/genotype.hpp"

namespace spikernel {

struct InputShape {
    int channels = 3, height = 32, width = 32;
    bool operator==(const InputShape&) const = default;
};

struct MacroConfig {
    int stem_channels = 16;
    std::array<int, 2> cell_channels = {16, 32};
    InputShape input;
    int num_classes = 10;
    int timesteps = 5;

    bool operator==(const MacroConfig&) const = default;
};

enum class ConvRole { stem, cell_edge, downsample_proj, classifier_fc };

// One trainable layer with its weight-filter dimensions: h1 x h2 kernel,
// c input channels, r filters. The classifier FC is counted as a 1x1
// convolution over its input features.
struct TrainableConv {
    std::string name;
    ConvRole role;
    int h1 = 0, h2 = 0, c = 0, r = 0;
    bool bias = true;
    int stage = 0;      // cell stage (0 or 1) for cell_edge convs
    int edge = 0;       // canonical edge index for cell_edge convs
};

struct NetworkArchitecture {
    CellGenotype genotype;
    MacroConfig cfg;
    // Spatial sizes: stage 1 runs at the input size, stage 2 after the 2x2
    // stride-2 pooling.
    int h1 = 0, w1 = 0;
    int h2 = 0, w2 = 0;
    // Trainable layers in forward order: stem, stage-1 cell conv edges,
    // downsample projection, stage-2 cell conv edges, classifier.
    std::vector<TrainableConv> convs;
};

// Validates the config, derives shapes and the trainable-layer list.
// Deterministic: equal (genotype, cfg) give structurally identical results.
// Throws ShapeError if input height or width < 2 (cannot survive
// downsampling); ValidationError on non-positive config fields or a
// stem/cell channel mismatch.
NetworkArchitecture expand_macro(const CellGenotype& genotype, const MacroConfig& cfg);

}  // namespace spikernel
