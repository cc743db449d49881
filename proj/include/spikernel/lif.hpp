#pragma once

// Discrete-time leaky integrate-and-fire dynamics:
//   u' = leak * membrane + input_current
//   spike where u' >= threshold, membrane reset at spiking positions.

#include <utility>

#include "spikernel/tensor.hpp"

namespace spikernel {

struct LifParams {
    enum class Reset { to_zero, by_subtraction };

    float threshold = 1.0f;   // > 0
    float leak = 0.9f;        // in (0, 1]
    Reset reset_mode = Reset::to_zero;

    bool operator==(const LifParams&) const = default;
};

void validate(const LifParams& p);

// Advances one timestep in place; spikes holds exactly 0.0f / 1.0f.
// All three tensors must share a shape.
void lif_step_inplace(Tensor4& membrane, const Tensor4& input_current,
                      const LifParams& p, Tensor4& spikes);

// Value-returning form: (spikes, new_membrane).
std::pair<Tensor4, Tensor4> lif_step(const Tensor4& membrane,
                                     const Tensor4& input_current,
                                     const LifParams& p);

}  // namespace spikernel
