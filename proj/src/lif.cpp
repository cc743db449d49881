#include "spikernel/lif.hpp"

namespace spikernel {

void validate(const LifParams& p) {
    if (!(p.threshold > 0.0f))
        throw ValidationError("LIF threshold must be > 0");
    if (!(p.leak > 0.0f && p.leak <= 1.0f))
        throw ValidationError("LIF leak must be in (0, 1]");
}

void lif_step_inplace(Tensor4& membrane, const Tensor4& input_current,
                      const LifParams& p, Tensor4& spikes) {
    if (!membrane.same_shape(input_current))
        throw ShapeError("membrane and input_current shapes differ");
    if (!spikes.same_shape(membrane)) spikes = Tensor4(membrane.n, membrane.c, membrane.h, membrane.w);

    const float theta = p.threshold;
    const float beta = p.leak;
    const bool subtract = p.reset_mode == LifParams::Reset::by_subtraction;
    const size_t n = membrane.v.size();
    for (size_t i = 0; i < n; ++i) {
        float u = beta * membrane.v[i] + input_current.v[i];
        if (u >= theta) {
            spikes.v[i] = 1.0f;
            membrane.v[i] = subtract ? u - theta : 0.0f;
        } else {
            spikes.v[i] = 0.0f;
            membrane.v[i] = u;
        }
    }
}

std::pair<Tensor4, Tensor4> lif_step(const Tensor4& membrane,
                                     const Tensor4& input_current,
                                     const LifParams& p) {
    Tensor4 m = membrane;
    Tensor4 spikes;
    lif_step_inplace(m, input_current, p, spikes);
    return {std::move(spikes), std::move(m)};
}

}  // namespace spikernel
