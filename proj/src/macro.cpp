#include "spikernel/macro.hpp"

namespace spikernel {

namespace {

void add_cell_convs(std::vector<TrainableConv>& out, const CellGenotype& g,
                    int stage, int channels) {
    for (int e = 0; e < kCellEdges; ++e) {
        const auto& op = g.edge_ops[e];
        if (op.tag != OpTag::conv) continue;
        TrainableConv tc;
        tc.name = "cell" + std::to_string(stage + 1) + ".e" + std::to_string(e) +
                  "." + op_to_tag(op);
        tc.role = ConvRole::cell_edge;
        tc.h1 = tc.h2 = op.kernel;
        tc.c = channels;
        tc.r = channels;
        tc.stage = stage;
        tc.edge = e;
        out.push_back(tc);
    }
}

}  // namespace

NetworkArchitecture expand_macro(const CellGenotype& genotype, const MacroConfig& cfg) {
    if (cfg.stem_channels < 1 || cfg.cell_channels[0] < 1 || cfg.cell_channels[1] < 1)
        throw ValidationError("channel counts must be >= 1");
    if (cfg.num_classes < 1) throw ValidationError("num_classes must be >= 1");
    if (cfg.timesteps < 1) throw ValidationError("timesteps must be >= 1");
    if (cfg.input.channels < 1) throw ValidationError("input channels must be >= 1");
    if (cfg.input.height < 2 || cfg.input.width < 2)
        throw ShapeError("input " + std::to_string(cfg.input.height) + "x" +
                         std::to_string(cfg.input.width) +
                         " too small to survive downsampling");
    // Cell ops preserve channel count, so stage 1 runs at the stem width.
    if (cfg.cell_channels[0] != cfg.stem_channels)
        throw ValidationError("cell_channels[0] must equal stem_channels (" +
                              std::to_string(cfg.cell_channels[0]) + " vs " +
                              std::to_string(cfg.stem_channels) + ")");

    NetworkArchitecture arch;
    arch.genotype = genotype;
    arch.cfg = cfg;
    arch.h1 = cfg.input.height;
    arch.w1 = cfg.input.width;
    arch.h2 = cfg.input.height / 2;
    arch.w2 = cfg.input.width / 2;

    // Stem: 3x3 conv, input channels -> stem channels, spiking stage after.
    arch.convs.push_back({"stem", ConvRole::stem, 3, 3, cfg.input.channels,
                          cfg.stem_channels, true, 0, 0});

    add_cell_convs(arch.convs, genotype, 0, cfg.cell_channels[0]);

    // Downsample: 2x2 stride-2 average pooling then a 1x1 projection to the
    // stage-2 channel count, spiking stage after.
    arch.convs.push_back({"downsample.proj", ConvRole::downsample_proj, 1, 1,
                          cfg.cell_channels[0], cfg.cell_channels[1], true, 0, 0});

    add_cell_convs(arch.convs, genotype, 1, cfg.cell_channels[1]);

    // Classifier: global average pool over space, spike-count accumulation
    // over timesteps, then a fully connected layer (1x1 conv for counting).
    arch.convs.push_back({"classifier", ConvRole::classifier_fc, 1, 1,
                          cfg.cell_channels[1], cfg.num_classes, true, 0, 0});

    return arch;
}

}  // namespace spikernel
