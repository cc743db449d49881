#pragma once

// Cell operation vocabulary and kernel-size sets.

#include <array>
#include <string>
#include <vector>

#include "spikernel/errors.hpp"

namespace spikernel {

enum class OpTag { zeroize, skip_con, conv, avg_pool3 };

// One edge operation. Only conv carries a kernel side length (odd, in
// {1,3,5,7}); zeroize contributes a zero tensor, skip_con passes its input
// unchanged, avg_pool3 is a parameter-free 3x3 mean pool.
struct OperationKind {
    OpTag tag = OpTag::zeroize;
    int kernel = 0;  // only meaningful for conv

    static OperationKind zeroize() { return {OpTag::zeroize, 0}; }
    static OperationKind skip() { return {OpTag::skip_con, 0}; }
    static OperationKind conv(int k);
    static OperationKind avgpool() { return {OpTag::avg_pool3, 0}; }

    bool operator==(const OperationKind&) const = default;
};

// Serialization tags: "zero", "skip", "conv1", "conv3", "conv5", "conv7",
// "avgpool".
std::string op_to_tag(const OperationKind& op);
OperationKind op_from_tag(const std::string& tag);

bool valid_kernel_size(int k);

// A pair of convolution kernel sizes. Together with zeroize/skip/avgpool it
// defines the 5-operation cell vocabulary.
struct KernelSet {
    int ka = 0;
    int kb = 0;

    KernelSet() = default;
    KernelSet(int a, int b);

    // Canonical label, e.g. "3x3_5x5".
    std::string name() const;

    // Position in the canonical six-set table (1..6), ordered
    // (1,3),(1,5),(3,5),(1,7),(3,7),(5,7).
    int table_index() const;

    bool operator==(const KernelSet&) const = default;
};

// The six canonical sets in table order.
const std::array<KernelSet, 6>& canonical_sets();

// Exactly [zeroize, skip, conv(ka), conv(kb), avgpool], in this order.
// The order is the serialization/draw order for genotypes.
std::vector<OperationKind> vocabulary(const KernelSet& set);

}  // namespace spikernel
