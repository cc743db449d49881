#include "spikernel/genotype.hpp"

#include <algorithm>

namespace spikernel {

CellGenotype random_genotype_from(Rng& rng, std::span<const OperationKind> vocab) {
    if (vocab.empty()) throw ValidationError("vocabulary must not be empty");
    CellGenotype g;
    for (int e = 0; e < kCellEdges; ++e)
        g.edge_ops[e] = vocab[rng.next_below(vocab.size())];
    return g;
}

CellGenotype random_genotype(Rng& rng, const KernelSet& set) {
    auto vocab = vocabulary(set);
    return random_genotype_from(rng, vocab);
}

std::string format_genotype(const CellGenotype& g) {
    std::string out;
    for (int e = 0; e < kCellEdges; ++e) {
        if (e) out += '|';
        out += op_to_tag(g.edge_ops[e]);
    }
    return out;
}

CellGenotype parse_genotype(const std::string& text) {
    CellGenotype g;
    size_t pos = 0;
    int e = 0;
    while (true) {
        size_t next = text.find('|', pos);
        std::string tag = (next == std::string::npos) ? text.substr(pos)
                                                      : text.substr(pos, next - pos);
        if (e >= kCellEdges)
            throw ParseError("genotype has more than " + std::to_string(kCellEdges) +
                             " edges", pos);
        try {
            g.edge_ops[e] = op_from_tag(tag);
        } catch (const ValidationError& err) {
            throw ParseError(err.what(), pos);
        }
        ++e;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (e != kCellEdges)
        throw ParseError("genotype has " + std::to_string(e) + " edges, expected " +
                         std::to_string(kCellEdges), text.size());
    return g;
}

void check_genotype_in_vocabulary(const CellGenotype& g, const KernelSet& set) {
    auto vocab = vocabulary(set);
    for (int e = 0; e < kCellEdges; ++e) {
        const auto& op = g.edge_ops[e];
        if (std::find(vocab.begin(), vocab.end(), op) == vocab.end())
            throw ValidationError("edge " + std::to_string(e) + " op '" +
                                  op_to_tag(op) + "' is not in the vocabulary of " +
                                  set.name());
    }
}

CellGenotype uniform_genotype(const OperationKind& op) {
    CellGenotype g;
    g.edge_ops.fill(op);
    return g;
}

}  // namespace spikernel
