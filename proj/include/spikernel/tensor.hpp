#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spikernel/errors.hpp"

namespace spikernel {

// Dense (N, C, H, W) float tensor, row-major.
struct Tensor4 {
    int n = 0, c = 0, h = 0, w = 0;
    std::vector<float> v;

    Tensor4() = default;
    Tensor4(int n_, int c_, int h_, int w_)
        : n(n_), c(c_), h(h_), w(w_),
          v(static_cast<size_t>(n_) * c_ * h_ * w_, 0.0f) {}

    size_t size() const { return v.size(); }

    float& at(int b, int ci, int y, int x) {
        return v[((static_cast<size_t>(b) * c + ci) * h + y) * w + x];
    }
    float at(int b, int ci, int y, int x) const {
        return v[((static_cast<size_t>(b) * c + ci) * h + y) * w + x];
    }

    float* plane(int b, int ci) {
        return v.data() + (static_cast<size_t>(b) * c + ci) * h * w;
    }
    const float* plane(int b, int ci) const {
        return v.data() + (static_cast<size_t>(b) * c + ci) * h * w;
    }

    bool same_shape(const Tensor4& o) const {
        return n == o.n && c == o.c && h == o.h && w == o.w;
    }
};

// Binary spike tensor over (sample, timestep, channel, height, width).
// Elements are 0 or 1.
struct SpikeBatch {
    int b = 0, t = 0, c = 0, h = 0, w = 0;
    std::vector<uint8_t> v;

    SpikeBatch() = default;
    SpikeBatch(int b_, int t_, int c_, int h_, int w_)
        : b(b_), t(t_), c(c_), h(h_), w(w_),
          v(static_cast<size_t>(b_) * t_ * c_ * h_ * w_, 0) {}

    uint8_t& at(int bi, int ti, int ci, int y, int x) {
        return v[(((static_cast<size_t>(bi) * t + ti) * c + ci) * h + y) * w + x];
    }
    uint8_t at(int bi, int ti, int ci, int y, int x) const {
        return v[(((static_cast<size_t>(bi) * t + ti) * c + ci) * h + y) * w + x];
    }

    // All samples' spikes at one timestep as a float (B, C, H, W) tensor.
    Tensor4 timestep(int ti) const {
        Tensor4 out(b, c, h, w);
        const size_t plane = static_cast<size_t>(c) * h * w;
        for (int bi = 0; bi < b; ++bi) {
            const uint8_t* src = v.data() + (static_cast<size_t>(bi) * t + ti) * plane;
            float* dst = out.v.data() + static_cast<size_t>(bi) * plane;
            for (size_t i = 0; i < plane; ++i) dst[i] = static_cast<float>(src[i]);
        }
        return out;
    }
};

}  // namespace spikernel
