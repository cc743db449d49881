#pragma once

// Representation capability score R: log-determinant of the layer-summed
// Hamming kernel of binary activation vectors.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "spikernel/macro.hpp"
#include "spikernel/snn.hpp"

namespace spikernel {

enum class ScoreMode {
    similarity,    // K[i][j] = n_a - hamming(f_i, f_j)  (default)
    raw_distance,  // K[i][j] = hamming(f_i, f_j)
};

const char* score_mode_name(ScoreMode m);
ScoreMode score_mode_from_name(const std::string& name);

// B x B symmetric integer kernel for one layer.
struct KernelMatrix {
    int b = 0;
    int64_t n_a = 0;
    std::vector<int64_t> k;  // row-major b*b

    KernelMatrix() = default;
    KernelMatrix(int b_, int64_t n_a_) : b(b_), n_a(n_a_), k(static_cast<size_t>(b_) * b_, 0) {}

    int64_t& at(int i, int j) { return k[static_cast<size_t>(i) * b + j]; }
    int64_t at(int i, int j) const { return k[static_cast<size_t>(i) * b + j]; }
};

// Pairwise XOR-popcount distances for one recorded layer, exact integer
// arithmetic. LengthError on ragged vectors.
KernelMatrix hamming_matrix(const ActivationRecord& record, size_t layer,
                            ScoreMode mode);

struct ScoreReport {
    double r_value = -std::numeric_limits<double>::infinity();
    bool degenerate = true;
    ScoreMode mode = ScoreMode::similarity;
    int batch = 0;
    std::vector<std::string> layer_names;
    std::vector<int64_t> layer_n_a;
    std::vector<double> summed_k;          // B x B, row-major
    std::vector<KernelMatrix> per_layer;   // retained only when requested
};

// S = sum of the per-layer kernels (summed in floating point); R = ln det S
// via a partially pivoted LU factorization. Degenerate (r = -inf) when the
// determinant is non-positive, non-finite, or below the scale-aware
// tolerance 1e-12 * max|pivot|^B. DimensionError on mixed matrix sizes.
ScoreReport representation_score(const std::vector<KernelMatrix>& matrices,
                                 ScoreMode mode);

struct CandidateSeeds {
    uint64_t weights = 0;
    uint64_t encode = 0;
};

// Full pipeline: expand_macro -> rate_encode -> forward_record ->
// hamming_matrix per recorded layer -> representation_score. Deterministic
// under fixed seeds. Batch must hold at least 2 samples.
ScoreReport score_candidate(const CellGenotype& genotype, const MacroConfig& cfg,
                            const Tensor4& images, const CandidateSeeds& seeds,
                            const LifParams& lif = {},
                            ScoreMode mode = ScoreMode::similarity,
                            bool keep_matrices = false);

}  // namespace spikernel
