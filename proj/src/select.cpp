#include "spikernel/select.hpp"

namespace spikernel {

size_t select_model_index(const std::vector<CandidateRecord>& candidates,
                          const SelectionConstraints& c) {
    if (c.mem_const < 0) throw ValidationError("mem_const must be >= 0");
    if (!(c.acc_th >= 0.0 && c.acc_th <= 100.0))
        throw ValidationError("acc_th must be in [0,100]");

    for (const auto& r : candidates) {
        if (!r.accuracy.has_value())
            throw MissingAccuracy("candidate '" + r.id + "' has no accuracy value");
        if (!(*r.accuracy >= 0.0 && *r.accuracy <= 100.0))
            throw ValidationError("candidate '" + r.id + "' accuracy " +
                                  std::to_string(*r.accuracy) + " outside [0,100]");
        if (r.params < 0)
            throw ValidationError("candidate '" + r.id + "' has negative params");
    }

    bool found = false;
    size_t best = 0;
    for (size_t i = 0; i < candidates.size(); ++i) {
        const auto& r = candidates[i];
        if (r.params > c.mem_const || *r.accuracy < c.acc_th) continue;
        if (!found) {
            found = true;
            best = i;
            continue;
        }
        const auto& cur = candidates[best];
        if (*r.accuracy > *cur.accuracy ||
            (*r.accuracy == *cur.accuracy && r.params < cur.params))
            best = i;
    }
    if (!found)
        throw NoFeasibleCandidate(
            "no candidate satisfies params <= " + std::to_string(c.mem_const) +
            " and accuracy >= " + std::to_string(c.acc_th));
    return best;
}

CandidateRecord select_model(const std::vector<CandidateRecord>& candidates,
                             const SelectionConstraints& c) {
    return candidates[select_model_index(candidates, c)];
}

}  // namespace spikernel
