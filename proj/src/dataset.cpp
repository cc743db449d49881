#include "spikernel/dataset.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace spikernel {

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> list_files(const std::string& dir, const std::string& ext) {
    fs::path p(dir);
    if (!fs::exists(p)) throw IoError("dataset path does not exist: " + dir);
    std::vector<fs::path> files;
    if (fs::is_regular_file(p)) {
        files.push_back(p);
    } else {
        for (const auto& entry : fs::directory_iterator(p))
            if (entry.is_regular_file() && entry.path().extension() == ext)
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
    }
    if (files.empty())
        throw IoError("no " + ext + " files found under " + dir);
    return files;
}

// Distinct sample indices in draw order, deterministic under the rng.
std::vector<size_t> pick_indices(size_t total, int batch_size, Rng& rng) {
    if (static_cast<size_t>(batch_size) > total)
        throw ConfigError("batch size " + std::to_string(batch_size) +
                          " exceeds dataset size " + std::to_string(total));
    std::vector<size_t> pool(total);
    for (size_t i = 0; i < total; ++i) pool[i] = i;
    std::vector<size_t> picked(static_cast<size_t>(batch_size));
    for (int b = 0; b < batch_size; ++b) {
        size_t j = b + static_cast<size_t>(rng.next_below(total - b));
        std::swap(pool[b], pool[j]);
        picked[static_cast<size_t>(b)] = pool[b];
    }
    return picked;
}

Tensor4 load_cifar10(const DatasetSource& src, int batch_size, Rng& rng) {
    if (!(src.shape == InputShape{3, 32, 32}))
        throw ConfigError("cifar10_binary images are 3x32x32; configured shape is " +
                          std::to_string(src.shape.channels) + "x" +
                          std::to_string(src.shape.height) + "x" +
                          std::to_string(src.shape.width));

    auto files = list_files(src.path, ".bin");
    std::vector<size_t> counts;
    size_t total = 0;
    for (const auto& f : files) {
        const auto size = fs::file_size(f);
        if (size == 0 || size % kCifarRecordBytes != 0)
            throw IoError("file " + f.string() + " is not a whole number of " +
                          std::to_string(kCifarRecordBytes) +
                          "-byte records; trailing record starts at byte offset " +
                          std::to_string(size - size % kCifarRecordBytes));
        counts.push_back(size / kCifarRecordBytes);
        total += counts.back();
    }

    auto picked = pick_indices(total, batch_size, rng);
    Tensor4 out(batch_size, 3, 32, 32);
    std::vector<unsigned char> record(kCifarRecordBytes);
    for (int b = 0; b < batch_size; ++b) {
        size_t idx = picked[static_cast<size_t>(b)];
        size_t file_i = 0;
        while (idx >= counts[file_i]) {
            idx -= counts[file_i];
            ++file_i;
        }
        std::ifstream in(files[file_i], std::ios::binary);
        if (!in) throw IoError("cannot open " + files[file_i].string());
        in.seekg(static_cast<std::streamoff>(idx * kCifarRecordBytes));
        in.read(reinterpret_cast<char*>(record.data()), kCifarRecordBytes);
        if (!in)
            throw IoError("short read in " + files[file_i].string() + " at record " +
                          std::to_string(idx));
        // record[0] is the label byte; pixels follow plane by plane.
        float* dst = out.v.data() + static_cast<size_t>(b) * 3 * 32 * 32;
        for (size_t i = 0; i < 3072; ++i)
            dst[i] = static_cast<float>(record[1 + i]) / 255.0f;
    }
    return out;
}

struct SpktFile {
    fs::path path;
    uint32_t n = 0, c = 0, h = 0, w = 0;
};

SpktFile read_spkt_header(const fs::path& f) {
    std::ifstream in(f, std::ios::binary);
    if (!in) throw IoError("cannot open " + f.string());
    char magic[4];
    uint32_t dims[4];
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(dims), sizeof(dims));
    if (!in || std::memcmp(magic, kSpktMagic, 4) != 0)
        throw IoError("file " + f.string() + " is not an SPKT tensor (bad magic)");
    SpktFile sf{f, dims[0], dims[1], dims[2], dims[3]};
    const uintmax_t expect = 20 + static_cast<uintmax_t>(sf.n) * sf.c * sf.h * sf.w;
    const uintmax_t actual = fs::file_size(f);
    if (actual != expect)
        throw IoError("file " + f.string() + " has " + std::to_string(actual) +
                      " bytes, expected " + std::to_string(expect) +
                      " (payload truncated at byte offset " +
                      std::to_string(std::min(actual, expect)) + ")");
    return sf;
}

Tensor4 load_spkt(const DatasetSource& src, int batch_size, Rng& rng) {
    auto files = list_files(src.path, ".spkt");
    std::vector<SpktFile> headers;
    size_t total = 0;
    for (const auto& f : files) {
        auto sf = read_spkt_header(f);
        if (static_cast<int>(sf.c) != src.shape.channels ||
            static_cast<int>(sf.h) != src.shape.height ||
            static_cast<int>(sf.w) != src.shape.width)
            throw ConfigError("SPKT tensor " + f.string() + " shape " +
                              std::to_string(sf.c) + "x" + std::to_string(sf.h) + "x" +
                              std::to_string(sf.w) + " does not match configured " +
                              std::to_string(src.shape.channels) + "x" +
                              std::to_string(src.shape.height) + "x" +
                              std::to_string(src.shape.width));
        headers.push_back(sf);
        total += sf.n;
    }

    auto picked = pick_indices(total, batch_size, rng);
    const size_t plane = static_cast<size_t>(src.shape.channels) *
                         src.shape.height * src.shape.width;
    Tensor4 out(batch_size, src.shape.channels, src.shape.height, src.shape.width);
    std::vector<unsigned char> buf(plane);
    for (int b = 0; b < batch_size; ++b) {
        size_t idx = picked[static_cast<size_t>(b)];
        size_t file_i = 0;
        while (idx >= headers[file_i].n) {
            idx -= headers[file_i].n;
            ++file_i;
        }
        std::ifstream in(headers[file_i].path, std::ios::binary);
        if (!in) throw IoError("cannot open " + headers[file_i].path.string());
        in.seekg(static_cast<std::streamoff>(20 + idx * plane));
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(plane));
        if (!in)
            throw IoError("short read in " + headers[file_i].path.string() +
                          " at record " + std::to_string(idx));
        float* dst = out.v.data() + static_cast<size_t>(b) * plane;
        for (size_t i = 0; i < plane; ++i)
            dst[i] = static_cast<float>(buf[i]) / 255.0f;
    }
    return out;
}

Tensor4 load_synthetic(const DatasetSource& src, int batch_size, Rng& rng) {
    Tensor4 out(batch_size, src.shape.channels, src.shape.height, src.shape.width);
    for (auto& px : out.v) px = static_cast<float>(rng.next_double());
    return out;
}

}  // namespace

Tensor4 load_batch(const DatasetSource& src, int batch_size, Rng& rng) {
    if (batch_size < 1) throw ValidationError("batch_size must be >= 1");
    switch (src.kind) {
        case DatasetKind::cifar10_binary: return load_cifar10(src, batch_size, rng);
        case DatasetKind::spkt: return load_spkt(src, batch_size, rng);
        case DatasetKind::synthetic: return load_synthetic(src, batch_size, rng);
    }
    throw ConfigError("unknown dataset kind");
}

InputShape probe_spkt_shape(const std::string& path) {
    auto files = list_files(path, ".spkt");
    auto sf = read_spkt_header(files[0]);
    return InputShape{static_cast<int>(sf.c), static_cast<int>(sf.h),
                      static_cast<int>(sf.w)};
}

DatasetKind dataset_kind_from_name(const std::string& name) {
    if (name == "cifar10" || name == "cifar10-binary" || name == "cifar10_binary")
        return DatasetKind::cifar10_binary;
    if (name == "spkt") return DatasetKind::spkt;
    if (name == "synthetic") return DatasetKind::synthetic;
    throw ConfigError("unknown dataset '" + name +
                      "' (expected cifar10, spkt, or synthetic)");
}

const char* dataset_kind_name(DatasetKind kind) {
    switch (kind) {
        case DatasetKind::cifar10_binary: return "cifar10";
        case DatasetKind::spkt: return "spkt";
        case DatasetKind::synthetic: return "synthetic";
    }
    return "unknown";
}

}  // namespace spikernel
