#include "pulseaug/sample_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>

#include <json.hpp>

namespace pulseaug {

static_assert(std::endian::native == std::endian::little,
              "container payloads are little-endian; big-endian hosts need byte swapping");

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

void write_bytes(const std::filesystem::path& path, const void* data, std::size_t bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open for writing: " + path.string());
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(bytes));
    if (!out) throw FormatError("short write: " + path.string());
}

std::vector<char> read_bytes(const std::filesystem::path& path, std::size_t expected,
                             const char* what) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw FormatError("cannot open: " + path.string());
    const auto actual = static_cast<std::size_t>(in.tellg());
    if (actual != expected)
        throw FormatError(std::string(what) + " size mismatch in " + path.string() +
                          ": expected " + std::to_string(expected) + " bytes, found " +
                          std::to_string(actual));
    std::vector<char> buf(actual);
    in.seekg(0);
    in.read(buf.data(), static_cast<std::streamsize>(actual));
    if (!in) throw FormatError("short read: " + path.string());
    return buf;
}

long require_int(const ordered_json& meta, const char* key) {
    if (!meta.contains(key) || !meta.at(key).is_number_integer())
        throw FormatError(std::string("meta.json: missing or non-integer key '") + key + "'");
    return meta.at(key).get<long>();
}

}  // namespace

void write_sample(const Sample& sample, const std::filesystem::path& dir, PixelDtype dtype) {
    std::filesystem::create_directories(dir);

    ordered_json meta;
    meta["schema_version"] = kSchemaVersion;
    meta["id"] = sample.id;
    meta["frames"] = sample.clip.frames;
    meta["height"] = sample.clip.height;
    meta["width"] = sample.clip.width;
    meta["channels"] = sample.clip.channels;
    meta["fps"] = sample.clip.fps;
    meta["dtype"] = dtype == PixelDtype::U8 ? "u8" : "f32";
    meta["layout"] = "THWC";
    if (sample.reference_hr) meta["reference_hr"] = *sample.reference_hr;

    const std::string text = meta.dump(2) + "\n";
    write_bytes(dir / "meta.json", text.data(), text.size());

    if (dtype == PixelDtype::F32) {
        write_bytes(dir / "frames.bin", sample.clip.data.data(),
                    sample.clip.data.size() * sizeof(float));
    } else {
        std::vector<std::uint8_t> quantized(sample.clip.data.size());
        for (std::size_t i = 0; i < quantized.size(); ++i) {
            const double v = std::round(static_cast<double>(sample.clip.data[i]) * 255.0);
            quantized[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
        }
        write_bytes(dir / "frames.bin", quantized.data(), quantized.size());
    }

    std::vector<float> signal(sample.trace.values.size());
    for (std::size_t i = 0; i < signal.size(); ++i)
        signal[i] = static_cast<float>(sample.trace.values[i]);
    write_bytes(dir / "signal.bin", signal.data(), signal.size() * sizeof(float));
}

Sample read_sample(const std::filesystem::path& dir) {
    std::ifstream meta_in(dir / "meta.json");
    if (!meta_in) throw FormatError("cannot open: " + (dir / "meta.json").string());
    ordered_json meta;
    try {
        meta_in >> meta;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("meta.json parse error in " + dir.string() + ": " + e.what());
    }

    const long version = require_int(meta, "schema_version");
    if (version != kSchemaVersion)
        throw FormatError("unknown schema_version " + std::to_string(version) + " in " +
                          dir.string());
    if (!meta.contains("id") || !meta.at("id").is_string())
        throw FormatError("meta.json: missing or non-string key 'id'");
    if (!meta.contains("fps") || !meta.at("fps").is_number())
        throw FormatError("meta.json: missing or non-numeric key 'fps'");
    if (!meta.contains("layout") || meta.at("layout") != "THWC")
        throw FormatError("meta.json: layout must be \"THWC\"");
    if (!meta.contains("dtype") || (meta.at("dtype") != "u8" && meta.at("dtype") != "f32"))
        throw FormatError("meta.json: dtype must be \"u8\" or \"f32\"");

    Sample sample;
    sample.id = meta.at("id").get<std::string>();
    const long frames = require_int(meta, "frames");
    const long height = require_int(meta, "height");
    const long width = require_int(meta, "width");
    const long channels = require_int(meta, "channels");
    if (frames < 1 || height < 1 || width < 1 || channels < 1)
        throw FormatError("meta.json: dimensions must be positive");

    sample.clip.frames = static_cast<int>(frames);
    sample.clip.height = static_cast<int>(height);
    sample.clip.width = static_cast<int>(width);
    sample.clip.channels = static_cast<int>(channels);
    sample.clip.fps = meta.at("fps").get<double>();
    if (!std::isfinite(sample.clip.fps) || sample.clip.fps <= 0.0)
        throw FormatError("meta.json: fps must be positive and finite");
    sample.trace.fps = sample.clip.fps;
    if (meta.contains("reference_hr")) {
        if (!meta.at("reference_hr").is_number())
            throw FormatError("meta.json: reference_hr must be a number");
        sample.reference_hr = meta.at("reference_hr").get<double>();
    }

    const std::size_t elements =
        static_cast<std::size_t>(frames) * height * width * channels;
    const bool u8 = meta.at("dtype") == "u8";

    const auto pixels =
        read_bytes(dir / "frames.bin", elements * (u8 ? 1 : sizeof(float)), "frames.bin");
    sample.clip.data.resize(elements);
    if (u8) {
        for (std::size_t i = 0; i < elements; ++i)
            sample.clip.data[i] =
                static_cast<float>(static_cast<std::uint8_t>(pixels[i])) / 255.0f;
    } else {
        std::copy_n(reinterpret_cast<const float*>(pixels.data()), elements,
                    sample.clip.data.begin());
    }

    const auto signal = read_bytes(dir / "signal.bin",
                                   static_cast<std::size_t>(frames) * sizeof(float), "signal.bin");
    sample.trace.values.resize(static_cast<std::size_t>(frames));
    const float* sig = reinterpret_cast<const float*>(signal.data());
    for (std::size_t i = 0; i < sample.trace.values.size(); ++i)
        sample.trace.values[i] = static_cast<double>(sig[i]);

    return sample;
}

std::vector<std::string> list_sample_dirs(const std::filesystem::path& root) {
    if (!std::filesystem::is_directory(root))
        throw FormatError("not a directory: " + root.string());
    std::vector<std::string> names;
    for (const auto& entry : std::filesystem::directory_iterator(root))
        if (entry.is_directory() && std::filesystem::exists(entry.path() / "meta.json"))
            names.push_back(entry.path().filename().string());
    std::sort(names.begin(), names.end());
    return names;
}

}  // namespace pulseaug
