#include "spikernel/snn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace spikernel {

void BitVector::append_bit(bool b) {
    if ((nbits & 63) == 0) words.push_back(0);
    if (b) words.back() |= 1ULL << (nbits & 63);
    ++nbits;
}

void BitVector::append01(const float* p, size_t n) {
    words.reserve((nbits + n + 63) / 64);
    size_t i = 0;
    while (i < n) {
        size_t off = nbits & 63;
        if (off == 0) words.push_back(0);
        size_t take = std::min<size_t>(64 - off, n - i);
        uint64_t acc = 0;
        for (size_t j = 0; j < take; ++j)
            acc |= static_cast<uint64_t>(p[i + j] != 0.0f) << (off + j);
        words.back() |= acc;
        nbits += take;
        i += take;
    }
}

bool BitVector::bit(size_t i) const {
    return (words[i >> 6] >> (i & 63)) & 1ULL;
}

int64_t hamming_distance(const BitVector& a, const BitVector& b) {
    if (a.nbits != b.nbits)
        throw LengthError("hamming_distance over vectors of different length: " +
                          std::to_string(a.nbits) + " vs " + std::to_string(b.nbits));
    int64_t d = 0;
    for (size_t i = 0; i < a.words.size(); ++i)
        d += std::popcount(a.words[i] ^ b.words[i]);
    return d;
}

NetworkWeights init_weights(const NetworkArchitecture& arch, uint64_t seed) {
    Rng rng(seed);
    NetworkWeights nw;
    nw.weights.reserve(arch.convs.size());
    nw.biases.reserve(arch.convs.size());
    for (const auto& tc : arch.convs) {
        size_t count = static_cast<size_t>(tc.r) * tc.c * tc.h1 * tc.h2;
        float fan_in = static_cast<float>(tc.h1 * tc.h2 * tc.c);
        float bound = std::sqrt(6.0f / fan_in);
        std::vector<float> w(count);
        for (auto& x : w) x = rng.next_symmetric(bound);
        nw.weights.push_back(std::move(w));
        nw.biases.emplace_back(tc.bias ? tc.r : 0, 0.0f);
    }
    return nw;
}

SpikeBatch rate_encode(const Tensor4& images, int timesteps, Rng& rng) {
    if (timesteps < 1) throw ValidationError("timesteps must be >= 1");
    for (float px : images.v)
        if (!(px >= 0.0f && px <= 1.0f))
            throw RangeError("pixel value " + std::to_string(px) + " outside [0,1]");

    SpikeBatch out(images.n, timesteps, images.c, images.h, images.w);
    const size_t plane = static_cast<size_t>(images.c) * images.h * images.w;
    size_t oi = 0;
    for (int b = 0; b < images.n; ++b) {
        const float* img = images.v.data() + static_cast<size_t>(b) * plane;
        for (int t = 0; t < timesteps; ++t)
            for (size_t i = 0; i < plane; ++i)
                out.v[oi++] = rng.next_double() < img[i] ? 1 : 0;
    }
    return out;
}

Tensor4 conv_forward(const Tensor4& in, std::span<const float> w,
                     std::span<const float> bias, int kernel, int out_ch) {
    if (kernel < 1 || kernel % 2 == 0)
        throw ShapeError("conv kernel must be odd and positive, got " +
                         std::to_string(kernel));
    const size_t expect_w = static_cast<size_t>(out_ch) * in.c * kernel * kernel;
    if (w.size() != expect_w)
        throw ShapeError("conv weight count " + std::to_string(w.size()) +
                         " does not match " + std::to_string(expect_w));
    if (!bias.empty() && bias.size() != static_cast<size_t>(out_ch))
        throw ShapeError("conv bias count mismatch");

    const int pad = kernel / 2;
    const int h = in.h, width = in.w;
    Tensor4 out(in.n, out_ch, h, width);

    for (int b = 0; b < in.n; ++b) {
        for (int r = 0; r < out_ch; ++r) {
            float* oplane = out.plane(b, r);
            const float bv = bias.empty() ? 0.0f : bias[r];
            std::fill(oplane, oplane + static_cast<size_t>(h) * width, bv);
            for (int c = 0; c < in.c; ++c) {
                const float* iplane = in.plane(b, c);
                const float* wk = w.data() + ((static_cast<size_t>(r) * in.c + c) *
                                              kernel * kernel);
                for (int ky = 0; ky < kernel; ++ky) {
                    const int dy = ky - pad;
                    const int y0 = std::max(0, -dy);
                    const int y1 = std::min(h, h - dy);
                    for (int kx = 0; kx < kernel; ++kx) {
                        const float wv = wk[ky * kernel + kx];
                        if (wv == 0.0f) continue;
                        const int dx = kx - pad;
                        const int x0 = std::max(0, -dx);
                        const int x1 = std::min(width, width - dx);
                        for (int y = y0; y < y1; ++y) {
                            const float* irow = iplane + static_cast<size_t>(y + dy) * width + dx;
                            float* orow = oplane + static_cast<size_t>(y) * width;
                            for (int x = x0; x < x1; ++x) orow[x] += wv * irow[x];
                        }
                    }
                }
            }
        }
    }
    return out;
}

Tensor4 avgpool3_forward(const Tensor4& in) {
    Tensor4 out(in.n, in.c, in.h, in.w);
    const int h = in.h, w = in.w;
    for (int b = 0; b < in.n; ++b) {
        for (int c = 0; c < in.c; ++c) {
            const float* ip = in.plane(b, c);
            float* op = out.plane(b, c);
            for (int y = 0; y < h; ++y) {
                const int ylo = std::max(0, y - 1), yhi = std::min(h - 1, y + 1);
                for (int x = 0; x < w; ++x) {
                    const int xlo = std::max(0, x - 1), xhi = std::min(w - 1, x + 1);
                    float s = 0.0f;
                    for (int yy = ylo; yy <= yhi; ++yy)
                        for (int xx = xlo; xx <= xhi; ++xx)
                            s += ip[yy * w + xx];
                    op[y * w + x] = s / 9.0f;
                }
            }
        }
    }
    return out;
}

Tensor4 avgpool2x2_stride2(const Tensor4& in) {
    const int oh = in.h / 2, ow = in.w / 2;
    if (oh < 1 || ow < 1)
        throw ShapeError("input too small for 2x2 stride-2 pooling");
    Tensor4 out(in.n, in.c, oh, ow);
    for (int b = 0; b < in.n; ++b) {
        for (int c = 0; c < in.c; ++c) {
            const float* ip = in.plane(b, c);
            float* op = out.plane(b, c);
            for (int y = 0; y < oh; ++y)
                for (int x = 0; x < ow; ++x)
                    op[y * ow + x] = (ip[(2 * y) * in.w + 2 * x] +
                                      ip[(2 * y) * in.w + 2 * x + 1] +
                                      ip[(2 * y + 1) * in.w + 2 * x] +
                                      ip[(2 * y + 1) * in.w + 2 * x + 1]) * 0.25f;
        }
    }
    return out;
}

std::vector<float> global_avg_pool(const Tensor4& in) {
    std::vector<float> out(static_cast<size_t>(in.n) * in.c, 0.0f);
    const float inv = 1.0f / (static_cast<float>(in.h) * in.w);
    for (int b = 0; b < in.n; ++b)
        for (int c = 0; c < in.c; ++c) {
            const float* ip = in.plane(b, c);
            float s = 0.0f;
            for (int i = 0; i < in.h * in.w; ++i) s += ip[i];
            out[static_cast<size_t>(b) * in.c + c] = s * inv;
        }
    return out;
}

namespace {

// Maps arch.convs onto forward-order roles; built once per forward.
struct ConvIndex {
    int stem = -1;
    int downsample = -1;
    int classifier = -1;
    std::array<std::array<int, kCellEdges>, 2> cell_edge{};

    explicit ConvIndex(const NetworkArchitecture& arch) {
        for (auto& stage : cell_edge) stage.fill(-1);
        for (size_t i = 0; i < arch.convs.size(); ++i) {
            const auto& tc = arch.convs[i];
            switch (tc.role) {
                case ConvRole::stem: stem = static_cast<int>(i); break;
                case ConvRole::downsample_proj: downsample = static_cast<int>(i); break;
                case ConvRole::classifier_fc: classifier = static_cast<int>(i); break;
                case ConvRole::cell_edge:
                    cell_edge[tc.stage][tc.edge] = static_cast<int>(i);
                    break;
            }
        }
        if (stem < 0 || downsample < 0 || classifier < 0)
            throw ShapeError("malformed architecture: missing stem/downsample/classifier");
    }
};

bool is_recorded_edge(const OperationKind& op) {
    return op.tag == OpTag::conv || op.tag == OpTag::avg_pool3;
}

void accumulate(Tensor4& dst, const Tensor4& src) {
    if (!dst.same_shape(src)) throw ShapeError("node sum over mismatched shapes");
    for (size_t i = 0; i < dst.v.size(); ++i) dst.v[i] += src.v[i];
}

}  // namespace

ActivationRecord forward_record(const NetworkArchitecture& arch,
                                const NetworkWeights& weights,
                                const SpikeBatch& input, const LifParams& p,
                                std::vector<float>* logits_out) {
    validate(p);
    const auto& cfg = arch.cfg;
    if (input.c != cfg.input.channels || input.h != cfg.input.height ||
        input.w != cfg.input.width)
        throw ShapeError("input spike dims do not match the architecture input shape");
    if (input.t != cfg.timesteps)
        throw ShapeError("input timesteps " + std::to_string(input.t) +
                         " != configured " + std::to_string(cfg.timesteps));
    if (weights.weights.size() != arch.convs.size())
        throw ShapeError("weight table does not match the architecture");

    const int B = input.b;
    const ConvIndex idx(arch);

    // Recording order: stage-1 conv/pool edges in canonical edge order, the
    // downsample stage, stage-2 edges, then the pre-classifier stage. The
    // stem spikes feed the first cell but are not scored.
    ActivationRecord rec;
    rec.batch = B;
    rec.timesteps = cfg.timesteps;
    std::array<std::array<int, kCellEdges>, 2> edge_layer{};
    for (auto& stage : edge_layer) stage.fill(-1);
    int ds_layer = -1, head_layer = -1;
    for (int stage = 0; stage < 2; ++stage) {
        for (int e = 0; e < kCellEdges; ++e) {
            const auto& op = arch.genotype.edge_ops[e];
            if (!is_recorded_edge(op)) continue;
            edge_layer[stage][e] = static_cast<int>(rec.layers.size());
            rec.layers.push_back({"cell" + std::to_string(stage + 1) + ".e" +
                                      std::to_string(e) + "." + op_to_tag(op),
                                  0, std::vector<BitVector>(B)});
        }
        if (stage == 0) {
            ds_layer = static_cast<int>(rec.layers.size());
            rec.layers.push_back({"downsample", 0, std::vector<BitVector>(B)});
        }
    }
    head_layer = static_cast<int>(rec.layers.size());
    rec.layers.push_back({"head", 0, std::vector<BitVector>(B)});

    auto record_spikes = [&](int layer, const Tensor4& spikes) {
        const size_t plane = static_cast<size_t>(spikes.c) * spikes.h * spikes.w;
        auto& lr = rec.layers[layer];
        for (int b = 0; b < B; ++b)
            lr.per_sample[b].append01(spikes.v.data() + b * plane, plane);
    };

    // Persistent membranes (zero at rest).
    const int c1 = cfg.cell_channels[0], c2 = cfg.cell_channels[1];
    Tensor4 stem_mem(B, cfg.stem_channels, arch.h1, arch.w1);
    Tensor4 ds_mem(B, c2, arch.h2, arch.w2);
    Tensor4 head_mem(B, c2, arch.h2, arch.w2);
    std::array<std::array<Tensor4, kCellEdges>, 2> edge_mem;
    for (int e = 0; e < kCellEdges; ++e) {
        if (is_recorded_edge(arch.genotype.edge_ops[e])) {
            edge_mem[0][e] = Tensor4(B, c1, arch.h1, arch.w1);
            edge_mem[1][e] = Tensor4(B, c2, arch.h2, arch.w2);
        }
    }

    Tensor4 spikes_buf;
    auto run_cell = [&](int stage, const Tensor4& cell_input) {
        // Nodes start at zero; edges add into their target node.
        std::array<Tensor4, kCellNodes> nodes;
        nodes[0] = cell_input;
        for (int j = 1; j < kCellNodes; ++j)
            nodes[j] = Tensor4(cell_input.n, cell_input.c, cell_input.h, cell_input.w);
        for (int e = 0; e < kCellEdges; ++e) {
            const auto [from, to] = kEdgeList[e];
            const auto& op = arch.genotype.edge_ops[e];
            switch (op.tag) {
                case OpTag::zeroize:
                    break;
                case OpTag::skip_con:
                    accumulate(nodes[to], nodes[from]);
                    break;
                case OpTag::conv: {
                    const int ci = idx.cell_edge[stage][e];
                    Tensor4 cur = conv_forward(nodes[from], weights.weights[ci],
                                               weights.biases[ci], op.kernel,
                                               arch.convs[ci].r);
                    lif_step_inplace(edge_mem[stage][e], cur, p, spikes_buf);
                    record_spikes(edge_layer[stage][e], spikes_buf);
                    accumulate(nodes[to], spikes_buf);
                    break;
                }
                case OpTag::avg_pool3: {
                    Tensor4 cur = avgpool3_forward(nodes[from]);
                    lif_step_inplace(edge_mem[stage][e], cur, p, spikes_buf);
                    record_spikes(edge_layer[stage][e], spikes_buf);
                    accumulate(nodes[to], spikes_buf);
                    break;
                }
            }
        }
        return std::move(nodes[3]);
    };

    std::vector<float> rate_acc(static_cast<size_t>(B) * c2, 0.0f);
    for (int t = 0; t < cfg.timesteps; ++t) {
        Tensor4 x = input.timestep(t);
        Tensor4 stem_cur = conv_forward(x, weights.weights[idx.stem],
                                        weights.biases[idx.stem], 3, cfg.stem_channels);
        Tensor4 stem_spk;
        lif_step_inplace(stem_mem, stem_cur, p, stem_spk);

        Tensor4 cell1_out = run_cell(0, stem_spk);

        Tensor4 pooled = avgpool2x2_stride2(cell1_out);
        Tensor4 ds_cur = conv_forward(pooled, weights.weights[idx.downsample],
                                      weights.biases[idx.downsample], 1, c2);
        Tensor4 ds_spk;
        lif_step_inplace(ds_mem, ds_cur, p, ds_spk);
        record_spikes(ds_layer, ds_spk);

        Tensor4 cell2_out = run_cell(1, ds_spk);

        Tensor4 head_spk;
        lif_step_inplace(head_mem, cell2_out, p, head_spk);
        record_spikes(head_layer, head_spk);

        std::vector<float> gap = global_avg_pool(head_spk);
        for (size_t i = 0; i < rate_acc.size(); ++i) rate_acc[i] += gap[i];
    }

    for (auto& lr : rec.layers) {
        lr.n_bits = lr.per_sample.empty() ? 0 : lr.per_sample[0].nbits;
        for (const auto& bv : lr.per_sample)
            if (bv.nbits != lr.n_bits)
                throw LengthError("ragged activation vectors in layer " + lr.name);
    }

    if (logits_out) {
        const auto& fc_w = weights.weights[idx.classifier];
        const auto& fc_b = weights.biases[idx.classifier];
        const int classes = cfg.num_classes;
        logits_out->assign(static_cast<size_t>(B) * classes, 0.0f);
        for (int b = 0; b < B; ++b)
            for (int k = 0; k < classes; ++k) {
                float s = fc_b.empty() ? 0.0f : fc_b[k];
                for (int c = 0; c < c2; ++c)
                    s += fc_w[static_cast<size_t>(k) * c2 + c] *
                         rate_acc[static_cast<size_t>(b) * c2 + c];
                (*logits_out)[static_cast<size_t>(b) * classes + k] = s;
            }
    }

    return rec;
}

}  // namespace spikernel
