#pragma once

// Spiking forward simulator: rate coding, convolution/pooling over spike
// tensors, and recording of the binary activation vectors consumed by
// scoring.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spikernel/lif.hpp"
#include "spikernel/macro.hpp"
#include "spikernel/rng.hpp"
#include "spikernel/tensor.hpp"

namespace spikernel {

// Append-only bit vector backed by 64-bit words; pad bits stay zero.
struct BitVector {
    std::vector<uint64_t> words;
    size_t nbits = 0;

    void append_bit(bool b);
    // Appends n values that are exactly 0.0f or nonzero (treated as 1).
    void append01(const float* p, size_t n);
    bool bit(size_t i) const;
};

// XOR-popcount Hamming distance; LengthError if lengths differ.
int64_t hamming_distance(const BitVector& a, const BitVector& b);

// Per spiking layer: one flat binary vector per sample, spikes concatenated
// across all timesteps (length = timesteps * layer neuron count).
struct LayerRecord {
    std::string name;
    size_t n_bits = 0;
    std::vector<BitVector> per_sample;
};

struct ActivationRecord {
    int batch = 0;
    int timesteps = 0;
    std::vector<LayerRecord> layers;
};

// Weights and biases per trainable layer, indexed like arch.convs.
// Weight layout per layer: [r][c][h1][h2] row-major.
struct NetworkWeights {
    std::vector<std::vector<float>> weights;
    std::vector<std::vector<float>> biases;
};

// Zero-mean uniform weights with Kaiming-style fan-in bound sqrt(6/fan_in);
// biases start at zero. Draw order is the arch.convs order, row-major
// within each layer, so equal seeds give identical weights.
NetworkWeights init_weights(const NetworkArchitecture& arch, uint64_t seed);

// Bernoulli rate coding: element (b,t,c,y,x) spikes with probability equal
// to the pixel intensity. RangeError if any pixel is outside [0,1].
SpikeBatch rate_encode(const Tensor4& images, int timesteps, Rng& rng);

// Same-padded linear convolution with bias; input currents out.
// w has out_ch*in_ch*k*k entries ([r][c][ky][kx]), bias has out_ch.
Tensor4 conv_forward(const Tensor4& in, std::span<const float> w,
                     std::span<const float> bias, int kernel, int out_ch);

// Same-padded 3x3 mean pooling (zeros padded, divisor fixed at 9).
Tensor4 avgpool3_forward(const Tensor4& in);

// 2x2 stride-2 mean pooling; halves height and width (floor).
Tensor4 avgpool2x2_stride2(const Tensor4& in);

// Per-(sample, channel) spatial mean, size n*c.
std::vector<float> global_avg_pool(const Tensor4& in);

// Runs the full network for cfg.timesteps steps with membrane state
// persisting across timesteps. Records the binary LIF outputs of every
// cell conv/pool edge, the downsample stage, and the pre-classifier stage.
// If logits_out is non-null it receives the classifier outputs
// (batch * num_classes) computed from the accumulated spike counts.
ActivationRecord forward_record(const NetworkArchitecture& arch,
                                const NetworkWeights& weights,
                                const SpikeBatch& input, const LifParams& p,
                                std::vector<float>* logits_out = nullptr);

}  // namespace spikernel
