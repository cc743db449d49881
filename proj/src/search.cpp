#include "spikernel/search.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "spikernel/memory.hpp"

namespace spikernel {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_between(clock_type::time_point a, clock_type::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

void validate_config(const SearchConfig& cfg, const Tensor4& images) {
    if (cfg.iterations < 1) throw ValidationError("iterations must be >= 1");
    if (cfg.batch_size < 2) throw ValidationError("batch_size must be >= 2");
    if (images.n != cfg.batch_size)
        throw ConfigError("scoring batch holds " + std::to_string(images.n) +
                          " samples but batch_size is " + std::to_string(cfg.batch_size));
    validate(cfg.lif);
}

}  // namespace

SearchResult random_search(const SearchConfig& cfg, const Tensor4& images) {
    validate_config(cfg, images);

    const auto vocab = vocabulary(cfg.kernel_set);
    const uint64_t encode_seed = derive_seed(cfg.seed, Stream::encode, 0);
    const int64_t n = cfg.iterations;

    std::vector<IterationResult> results(static_cast<size_t>(n));
    std::atomic<int64_t> next{0};

    auto evaluate = [&](int64_t i) {
        const auto t0 = clock_type::now();
        Rng gen_rng(derive_seed(cfg.seed, Stream::genotype, static_cast<uint64_t>(i)));
        CellGenotype g = random_genotype_from(gen_rng, vocab);
        CandidateSeeds seeds{derive_seed(cfg.seed, Stream::weights, static_cast<uint64_t>(i)),
                             encode_seed};
        ScoreReport report = score_candidate(g, cfg.macro, images, seeds, cfg.lif, cfg.mode);
        int64_t params = network_params(expand_macro(g, cfg.macro)).total;
        const auto t1 = clock_type::now();
        results[static_cast<size_t>(i)] =
            IterationResult{i, g, report.r_value, report.degenerate, params,
                            ms_between(t0, t1)};
    };

    const auto wall0 = clock_type::now();
    const int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        for (int64_t i = 0; i < n; ++i) evaluate(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                    evaluate(i);
            });
        for (auto& th : pool) th.join();
    }
    const auto wall1 = clock_type::now();

    SearchResult out;
    out.history.iterations = std::move(results);
    out.history.total_elapsed_ms = ms_between(wall0, wall1);
    out.history.evaluations = n;

    // Highest R wins; -inf for degenerate, so a non-degenerate candidate
    // always beats a degenerate one. Strict > keeps the earliest on ties.
    size_t best = 0;
    for (size_t i = 1; i < out.history.iterations.size(); ++i)
        if (out.history.iterations[i].r_value > out.history.iterations[best].r_value)
            best = i;
    const auto& b = out.history.iterations[best];
    out.best = BestCandidate{b.index, b.genotype, b.r_value, b.degenerate, b.params};
    return out;
}

SpeedupReport compare_budgets(const SearchConfig& small_cfg,
                              const SearchConfig& large_cfg,
                              const Tensor4& images) {
    if (small_cfg.kernel_set != large_cfg.kernel_set ||
        small_cfg.batch_size != large_cfg.batch_size ||
        !(small_cfg.macro == large_cfg.macro) ||
        !(small_cfg.lif == large_cfg.lif) ||
        small_cfg.mode != large_cfg.mode ||
        small_cfg.workers != large_cfg.workers)
        throw ConfigError("compare_budgets configs must be identical except "
                          "iterations (and optionally seed)");
    if (small_cfg.iterations >= large_cfg.iterations)
        throw ConfigError("small budget must be strictly below the large budget");

    SearchResult small_run = random_search(small_cfg, images);
    SearchResult large_run = random_search(large_cfg, images);

    SpeedupReport rep;
    rep.evals_small = small_run.history.evaluations;
    rep.evals_large = large_run.history.evaluations;
    rep.eval_ratio = static_cast<double>(rep.evals_large) /
                     static_cast<double>(rep.evals_small);
    rep.wall_small_ms = small_run.history.total_elapsed_ms;
    rep.wall_large_ms = large_run.history.total_elapsed_ms;
    rep.wall_ratio = rep.wall_large_ms / rep.wall_small_ms;
    rep.best_r_small = small_run.best.r_value;
    rep.best_r_large = large_run.best.r_value;
    rep.best_r_diff = rep.best_r_large - rep.best_r_small;
    return rep;
}

}  // namespace spikernel
