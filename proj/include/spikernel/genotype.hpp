#pragma once

// Cell genotype: one operation per edge of the 4-node cell DAG.

#include <array>
#include <span>
#include <string>

#include "spikernel/ops.hpp"
#include "spikernel/rng.hpp"

namespace spikernel {

inline constexpr int kCellNodes = 4;
inline constexpr int kCellEdges = 6;

// Canonical edge order: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
inline constexpr std::array<std::pair<int, int>, kCellEdges> kEdgeList = {{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

// Node 0 is the cell input; node j > 0 sums the outputs of all edges (i->j)
// with i < j; node 3 is the cell output.
struct CellGenotype {
    std::array<OperationKind, kCellEdges> edge_ops{};

    bool operator==(const CellGenotype&) const = default;
};

// Each edge drawn uniformly and independently from the given vocabulary.
CellGenotype random_genotype_from(Rng& rng, std::span<const OperationKind> vocab);
CellGenotype random_genotype(Rng& rng, const KernelSet& set);

// Compact "|"-separated string, e.g. "conv5|skip|zero|avgpool|conv3|conv5",
// edges in canonical order. Round-trips through parse_genotype.
std::string format_genotype(const CellGenotype& g);
CellGenotype parse_genotype(const std::string& text);

// Throws ValidationError unless every edge op belongs to vocabulary(set).
void check_genotype_in_vocabulary(const CellGenotype& g, const KernelSet& set);

// Genotype with every edge set to the same op (test/diagnostic helper).
CellGenotype uniform_genotype(const OperationKind& op);

}  // namespace spikernel
