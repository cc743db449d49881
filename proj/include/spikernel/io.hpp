#pragma once

// File formats: genotype/best JSON, candidate-record JSON, history CSV,
// score dumps, and the report CSVs. Everything written here is re-readable
// by the matching reader.

#include <string>
#include <vector>

#include "spikernel/scoring.hpp"
#include "spikernel/search.hpp"
#include "spikernel/select.hpp"
#include "spikernel/setting.hpp"

namespace spikernel {

// {"setting": "3x3_5x5_1000x", "edges": ["conv5","skip",...]} with edges in
// canonical order. Readers ignore extra fields, so best.json parses as a
// genotype file too.
struct GenotypeFile {
    Setting setting;
    CellGenotype genotype;
};

GenotypeFile read_genotype_json(const std::string& path);
void write_genotype_json(const std::string& path, const GenotypeFile& g);

struct BestFile {
    Setting setting;
    CellGenotype genotype;
    double r_value = 0.0;
    bool degenerate = false;
    int64_t params = 0;
    int64_t bytes = 0;
    uint64_t seed = 0;
    int batch_size = 0;
    ScoreMode mode = ScoreMode::similarity;
};

void write_best_json(const std::string& path, const BestFile& b);
BestFile read_best_json(const std::string& path);

// Columns: iteration, genotype_string, r_value, degenerate, params,
// elapsed_ms. Header row required. Degenerate scores serialize as -inf.
void write_history_csv(const std::string& path, const SearchHistory& h);
SearchHistory read_history_csv(const std::string& path);

std::vector<CandidateRecord> read_records_json(const std::string& path);
void write_records_json(const std::string& path,
                        const std::vector<CandidateRecord>& records);

// {"r_value", "degenerate", "mode", "batch", "layer_n_a"}.
void write_score_dump(const std::string& path, const ScoreReport& report);

// (setting, params, accuracy, r_value) rows for trade-off plots.
void write_tradeoff_csv(const std::string& path,
                        const std::vector<CandidateRecord>& records);

struct SpeedupRow {
    std::string label;
    int64_t iterations = 0;
    double total_elapsed_ms = 0.0;
    double eval_ratio = 0.0;  // baseline evals / this evals
    double wall_ratio = 0.0;  // baseline wall / this wall
};

void write_speedup_csv(const std::string& path, const std::vector<SpeedupRow>& rows);

// Speed-up rows relative to the history with the largest iteration count.
std::vector<SpeedupRow> speedup_rows(const std::vector<std::string>& labels,
                                     const std::vector<SearchHistory>& histories);

}  // namespace spikernel
