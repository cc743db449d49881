#include "spikernel/ops.hpp"

namespace spikernel {

bool valid_kernel_size(int k) {
    return k == 1 || k == 3 || k == 5 || k == 7;
}

OperationKind OperationKind::conv(int k) {
    if (!valid_kernel_size(k))
        throw ValidationError("conv kernel size must be one of {1,3,5,7}, got " +
                              std::to_string(k));
    return {OpTag::conv, k};
}

std::string op_to_tag(const OperationKind& op) {
    switch (op.tag) {
        case OpTag::zeroize: return "zero";
        case OpTag::skip_con: return "skip";
        case OpTag::conv: return "conv" + std::to_string(op.kernel);
        case OpTag::avg_pool3: return "avgpool";
    }
    throw ValidationError("unknown operation tag");
}

OperationKind op_from_tag(const std::string& tag) {
    if (tag == "zero") return OperationKind::zeroize();
    if (tag == "skip") return OperationKind::skip();
    if (tag == "avgpool") return OperationKind::avgpool();
    if (tag.rfind("conv", 0) == 0 && tag.size() == 5) {
        int k = tag[4] - '0';
        if (valid_kernel_size(k)) return OperationKind::conv(k);
    }
    throw ValidationError("unknown operation tag '" + tag + "'");
}

KernelSet::KernelSet(int a, int b) : ka(a), kb(b) {
    if (!valid_kernel_size(a) || !valid_kernel_size(b))
        throw ValidationError("kernel sizes must be in {1,3,5,7}, got " +
                              std::to_string(a) + "," + std::to_string(b));
    if (a >= b)
        throw ValidationError("kernel set requires ka < kb, got " +
                              std::to_string(a) + " >= " + std::to_string(b));
}

std::string KernelSet::name() const {
    return std::to_string(ka) + "x" + std::to_string(ka) + "_" +
           std::to_string(kb) + "x" + std::to_string(kb);
}

const std::array<KernelSet, 6>& canonical_sets() {
    static const std::array<KernelSet, 6> sets = {
        KernelSet(1, 3), KernelSet(1, 5), KernelSet(3, 5),
        KernelSet(1, 7), KernelSet(3, 7), KernelSet(5, 7),
    };
    return sets;
}

int KernelSet::table_index() const {
    const auto& sets = canonical_sets();
    for (size_t i = 0; i < sets.size(); ++i)
        if (sets[i] == *this) return static_cast<int>(i) + 1;
    throw ValidationError("kernel set " + name() + " is not one of the canonical six");
}

std::vector<OperationKind> vocabulary(const KernelSet& set) {
    return {
        OperationKind::zeroize(),
        OperationKind::skip(),
        OperationKind::conv(set.ka),
        OperationKind::conv(set.kb),
        OperationKind::avgpool(),
    };
}

}  // namespace spikernel
