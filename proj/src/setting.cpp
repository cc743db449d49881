#include "spikernel/setting.hpp"

#include <cctype>

namespace spikernel {

namespace {

// Reads a run of digits at pos; advances pos.
int64_t read_int(const std::string& text, size_t& pos, const char* what) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
        throw ParseError(std::string("expected ") + what, start);
    if (pos - start > 12)
        throw ParseError(std::string(what) + " is too long", start);
    return std::stoll(text.substr(start, pos - start));
}

void expect_char(const std::string& text, size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c)
        throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
}

// Reads "AxA" and returns A; both components must match.
int read_kernel(const std::string& text, size_t& pos) {
    size_t start = pos;
    int64_t a = read_int(text, pos, "kernel size");
    expect_char(text, pos, 'x');
    int64_t a2 = read_int(text, pos, "kernel size");
    if (a != a2)
        throw ValidationError("kernel must be square: '" +
                              text.substr(start, pos - start) + "'");
    return static_cast<int>(a);
}

}  // namespace

Setting parse_setting(const std::string& text) {
    size_t pos = 0;
    int a = read_kernel(text, pos);
    expect_char(text, pos, '_');
    int b = read_kernel(text, pos);
    expect_char(text, pos, '_');
    int64_t iters = read_int(text, pos, "iteration count");
    expect_char(text, pos, 'x');
    if (pos != text.size())
        throw ParseError("trailing characters after setting", pos);

    if (!valid_kernel_size(a) || !valid_kernel_size(b))
        throw ValidationError("kernel sizes must be in {1,3,5,7} in '" + text + "'");
    if (a >= b)
        throw ValidationError("setting requires A < B in '" + text + "'");
    if (iters < 1)
        throw ValidationError("iteration count must be >= 1 in '" + text + "'");
    return Setting{KernelSet(a, b), iters};
}

std::string format_setting(const Setting& s) {
    return s.set.name() + "_" + std::to_string(s.iterations) + "x";
}

}  // namespace spikernel
