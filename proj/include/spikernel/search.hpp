#pragma once

// Seeded random search over genotypes for one kernel set and iteration
// budget. Per-iteration substreams make results identical for any worker
// count or evaluation order.

#include <cstdint>
#include <vector>

#include "spikernel/scoring.hpp"
#include "spikernel/setting.hpp"

namespace spikernel {

struct SearchConfig {
    KernelSet kernel_set;
    int64_t iterations = 1000;
    uint64_t seed = 0;
    int batch_size = 16;
    MacroConfig macro;
    LifParams lif;
    ScoreMode mode = ScoreMode::similarity;
    int workers = 1;
};

struct IterationResult {
    int64_t index = 0;
    CellGenotype genotype;
    double r_value = 0.0;
    bool degenerate = false;
    int64_t params = 0;
    double elapsed_ms = 0.0;
};

struct SearchHistory {
    std::vector<IterationResult> iterations;  // one entry per iteration, in order
    double total_elapsed_ms = 0.0;
    int64_t evaluations = 0;
};

struct BestCandidate {
    int64_t iteration = 0;
    CellGenotype genotype;
    double r_value = 0.0;
    bool degenerate = false;
    int64_t params = 0;
};

struct SearchResult {
    BestCandidate best;
    SearchHistory history;
};

// Draws cfg.iterations genotypes from substreams derived from cfg.seed,
// scores each on the given batch, and returns the highest-R candidate
// (ties broken by lower iteration index; degenerate only if every
// candidate is degenerate). Duplicate genotypes are re-scored, keeping
// evaluation count equal to the iteration count.
SearchResult random_search(const SearchConfig& cfg, const Tensor4& images);

struct SpeedupReport {
    int64_t evals_small = 0, evals_large = 0;
    double eval_ratio = 0.0;  // large / small
    double wall_small_ms = 0.0, wall_large_ms = 0.0;
    double wall_ratio = 0.0;  // large / small
    double best_r_small = 0.0, best_r_large = 0.0;
    double best_r_diff = 0.0;  // large - small
};

// Runs both searches back to back on the same batch. Configs must be
// identical except for iterations; seeds may differ (independent-stream
// mode), and equal seeds make the smaller run a substream prefix of the
// larger one.
SpeedupReport compare_budgets(const SearchConfig& small_cfg,
                              const SearchConfig& large_cfg,
                              const Tensor4& images);

}  // namespace spikernel
