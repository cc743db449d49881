#include "spikernel/memory.hpp"

namespace spikernel {

std::pair<int64_t, int64_t> conv_params(int h1, int h2, int c, int r, bool bias) {
    if (h1 < 1 || h2 < 1 || c < 1 || r < 1)
        throw ValidationError("conv dims must be >= 1, got h1=" + std::to_string(h1) +
                              " h2=" + std::to_string(h2) + " c=" + std::to_string(c) +
                              " r=" + std::to_string(r));
    int64_t n_w = static_cast<int64_t>(h1) * h2 * c * r;
    int64_t n_b = bias ? r : 0;
    return {n_w, n_b};
}

MemoryReport network_params(const NetworkArchitecture& arch) {
    MemoryReport report;
    for (const auto& tc : arch.convs) {
        auto [n_w, n_b] = conv_params(tc.h1, tc.h2, tc.c, tc.r, tc.bias);
        report.layers.push_back({tc.name, n_w, n_b});
        report.total += n_w + n_b;
    }
    report.bytes = report.total * 4;
    return report;
}

}  // namespace spikernel
