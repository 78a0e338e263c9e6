#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "pulseaug/types.hpp"

namespace pulseaug {

/// Malformed or inconsistent on-disk data (bad meta.json, payload size
/// mismatch, unknown schema version). Maps to exit code 3 in the CLI.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PixelDtype { U8, F32 };

/// Writes a sample container: a directory holding meta.json, frames.bin
/// (raw little-endian THWC pixels) and signal.bin (raw little-endian
/// float32). f32 containers round-trip bit-exactly; u8 containers
/// round-trip after quantization (round(v * 255) / 255).
void write_sample(const Sample& sample, const std::filesystem::path& dir,
                  PixelDtype dtype = PixelDtype::F32);

/// Reads a container written by write_sample. Throws FormatError when the
/// metadata is malformed or the binary payload sizes disagree with it.
Sample read_sample(const std::filesystem::path& dir);

/// Sorted names of the container subdirectories under root (those holding
/// a meta.json). The position in this list is the sample index used for
/// seeding.
std::vector<std::string> list_sample_dirs(const std::filesystem::path& root);

}  // namespace pulseaug
