#include "spikernel/scoring.hpp"

#include <cmath>

namespace spikernel {

const char* score_mode_name(ScoreMode m) {
    return m == ScoreMode::similarity ? "similarity" : "raw-distance";
}

ScoreMode score_mode_from_name(const std::string& name) {
    if (name == "similarity") return ScoreMode::similarity;
    if (name == "raw-distance") return ScoreMode::raw_distance;
    throw ValidationError("unknown score mode '" + name +
                          "' (expected similarity or raw-distance)");
}

KernelMatrix hamming_matrix(const ActivationRecord& record, size_t layer,
                            ScoreMode mode) {
    const auto& lr = record.layers.at(layer);
    const int b = static_cast<int>(lr.per_sample.size());
    for (const auto& f : lr.per_sample)
        if (f.nbits != lr.n_bits)
            throw LengthError("ragged activation vectors in layer " + lr.name);

    KernelMatrix km(b, static_cast<int64_t>(lr.n_bits));
    for (int i = 0; i < b; ++i) {
        km.at(i, i) = mode == ScoreMode::similarity ? km.n_a : 0;
        for (int j = i + 1; j < b; ++j) {
            int64_t d = hamming_distance(lr.per_sample[i], lr.per_sample[j]);
            int64_t k = mode == ScoreMode::similarity ? km.n_a - d : d;
            km.at(i, j) = k;
            km.at(j, i) = k;
        }
    }
    return km;
}

namespace {

struct LogDet {
    double log_abs = 0.0;  // ln |det|
    int sign = 1;          // 0 when an exact zero pivot appears
    double max_pivot = 0.0;
    bool finite = true;
};

// Partially pivoted LU; determinant as (sign, ln|det|) to avoid overflow.
LogDet logdet_lu(std::vector<double> a, int n) {
    LogDet out;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::fabs(a[static_cast<size_t>(col) * n + col]);
        for (int row = col + 1; row < n; ++row) {
            double cand = std::fabs(a[static_cast<size_t>(row) * n + col]);
            if (cand > best) {
                best = cand;
                piv = row;
            }
        }
        if (piv != col) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<size_t>(piv) * n + j],
                          a[static_cast<size_t>(col) * n + j]);
            out.sign = -out.sign;
        }
        double pivot = a[static_cast<size_t>(col) * n + col];
        if (!std::isfinite(pivot)) {
            out.finite = false;
            return out;
        }
        out.max_pivot = std::max(out.max_pivot, std::fabs(pivot));
        if (pivot == 0.0) {
            out.sign = 0;
            out.log_abs = -std::numeric_limits<double>::infinity();
            return out;
        }
        if (pivot < 0.0) out.sign = -out.sign;
        out.log_abs += std::log(std::fabs(pivot));
        for (int row = col + 1; row < n; ++row) {
            double f = a[static_cast<size_t>(row) * n + col] / pivot;
            if (f == 0.0) continue;
            for (int j = col + 1; j < n; ++j)
                a[static_cast<size_t>(row) * n + j] -= f * a[static_cast<size_t>(col) * n + j];
        }
    }
    return out;
}

}  // namespace

ScoreReport representation_score(const std::vector<KernelMatrix>& matrices,
                                 ScoreMode mode) {
    if (matrices.empty())
        throw DimensionError("representation_score needs at least one kernel matrix");
    const int b = matrices[0].b;
    for (const auto& m : matrices)
        if (m.b != b)
            throw DimensionError("kernel matrices of mixed sizes: " +
                                 std::to_string(m.b) + " vs " + std::to_string(b));

    ScoreReport report;
    report.mode = mode;
    report.batch = b;
    report.summed_k.assign(static_cast<size_t>(b) * b, 0.0);
    for (const auto& m : matrices) {
        report.layer_n_a.push_back(m.n_a);
        for (size_t i = 0; i < m.k.size(); ++i)
            report.summed_k[i] += static_cast<double>(m.k[i]);
    }

    LogDet ld = logdet_lu(report.summed_k, b);
    // det > eps_det = 1e-12 * max|pivot|^B required; compared in log space.
    const double log_eps = std::log(1e-12) + b * std::log(ld.max_pivot);
    const bool positive = ld.finite && ld.sign > 0 && ld.max_pivot > 0.0;
    if (positive && ld.log_abs > log_eps) {
        report.degenerate = false;
        report.r_value = ld.log_abs;
    } else {
        report.degenerate = true;
        report.r_value = -std::numeric_limits<double>::infinity();
    }
    return report;
}

ScoreReport score_candidate(const CellGenotype& genotype, const MacroConfig& cfg,
                            const Tensor4& images, const CandidateSeeds& seeds,
                            const LifParams& lif, ScoreMode mode,
                            bool keep_matrices) {
    if (images.n < 2)
        throw ValidationError("scoring batch must hold at least 2 samples, got " +
                              std::to_string(images.n));

    NetworkArchitecture arch = expand_macro(genotype, cfg);
    NetworkWeights weights = init_weights(arch, seeds.weights);
    Rng encode_rng(seeds.encode);
    SpikeBatch spikes = rate_encode(images, cfg.timesteps, encode_rng);
    ActivationRecord rec = forward_record(arch, weights, spikes, lif);

    std::vector<KernelMatrix> mats;
    mats.reserve(rec.layers.size());
    for (size_t l = 0; l < rec.layers.size(); ++l)
        mats.push_back(hamming_matrix(rec, l, mode));

    ScoreReport report = representation_score(mats, mode);
    for (const auto& lr : rec.layers) report.layer_names.push_back(lr.name);
    if (keep_matrices) report.per_layer = std::move(mats);
    return report;
}

}  // namespace spikernel
