#pragma once

// Accuracy-memory trade-off selection over trained candidate records:
// keep candidates within the memory budget and above the accuracy floor,
// return the most accurate one.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "spikernel/genotype.hpp"

namespace spikernel {

struct CandidateRecord {
    std::string id;
    std::string setting;  // "AxA_BxB_Ix" label
    CellGenotype genotype;
    double r_value = -std::numeric_limits<double>::infinity();
    bool degenerate = false;
    int64_t params = 0;
    std::optional<double> accuracy;  // percent in [0,100], externally supplied
};

struct SelectionConstraints {
    int64_t mem_const = 10'000'000;  // parameter-count budget
    double acc_th = 0.0;             // minimum acceptable accuracy, percent
};

// Index of the selected record. Keeps candidates with params <= mem_const
// and accuracy >= acc_th; among those returns the highest accuracy, ties
// broken by smaller params, then earlier input position. Throws
// MissingAccuracy if any record lacks an accuracy value and
// NoFeasibleCandidate if nothing passes both filters.
size_t select_model_index(const std::vector<CandidateRecord>& candidates,
                          const SelectionConstraints& c);

CandidateRecord select_model(const std::vector<CandidateRecord>& candidates,
                             const SelectionConstraints& c);

}  // namespace spikernel
