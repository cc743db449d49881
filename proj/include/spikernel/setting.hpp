#pragma once

// "AxA_BxB_Ix" setting strings: kernel pair plus search iteration budget.

#include <cstdint>
#include <string>

#include "spikernel/ops.hpp"

namespace spikernel {

struct Setting {
    KernelSet set;
    int64_t iterations = 0;

    bool operator==(const Setting&) const = default;
};

// Parses e.g. "3x3_5x5_1000x". Throws ParseError (with position) on
// malformed text, ValidationError on A >= B, A or B outside {1,3,5,7},
// or I < 1. Inverse of format_setting.
Setting parse_setting(const std::string& text);

std::string format_setting(const Setting& s);

}  // namespace spikernel
