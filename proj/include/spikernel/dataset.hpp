#pragma once

// Dataset ingestion: CIFAR-10 binary records, the SPKT raw-tensor format,
// and a seeded synthetic source for dataset-free runs.

#include <string>

#include "spikernel/macro.hpp"
#include "spikernel/rng.hpp"
#include "spikernel/tensor.hpp"

namespace spikernel {

enum class DatasetKind { cifar10_binary, spkt, synthetic };

struct DatasetSource {
    DatasetKind kind = DatasetKind::synthetic;
    std::string path;  // directory of .bin files (cifar10) or .spkt files
    InputShape shape;  // (C,H,W); fixed to 3x32x32 for cifar10_binary
    int num_classes = 10;
};

// One cifar10-binary record: 1 label byte + 3072 pixel bytes
// (1024 red, 1024 green, 1024 blue, row-major).
inline constexpr size_t kCifarRecordBytes = 3073;
inline constexpr char kSpktMagic[4] = {'S', 'P', 'K', 'T'};

// Loads batch_size images in [0,1] as a (B,C,H,W) tensor. Sample selection
// is a deterministic function of the rng state (indices without
// replacement for file-backed sources); synthetic images are uniform [0,1]
// pixels drawn from the rng. Throws IoError for missing or truncated files
// and ConfigError for shape mismatches or too-small datasets.
Tensor4 load_batch(const DatasetSource& src, int batch_size, Rng& rng);

DatasetKind dataset_kind_from_name(const std::string& name);
const char* dataset_kind_name(DatasetKind kind);

// Shape carried by the first .spkt file under path (SPKT headers are
// self-describing, so CLI runs need no shape flags).
InputShape probe_spkt_shape(const std::string& path);

}  // namespace spikernel
