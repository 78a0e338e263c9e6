#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace pulseaug {

namespace detail {

// 64-bit avalanche mix (Murmur3 finalizer).
inline constexpr std::uint64_t fmix64(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
}

inline constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    return fmix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 4)));
}

// FNV-1a over the label bytes.
inline constexpr std::uint64_t hash_label(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

/// Deterministic random stream addressed by (master seed, stage label,
/// sample index, operator index). Streams with distinct addresses are
/// statistically independent; the same address always replays the same
/// sequence, regardless of execution order or thread count.
///
/// All draws are produced from splitmix64 steps plus hand-rolled
/// conversions, so the byte stream never depends on the standard
/// library's distribution implementations.
class SeededRng {
public:
    SeededRng(std::uint64_t master_seed, std::string_view stage,
              std::uint64_t sample_index, std::uint64_t operator_index)
        : SeededRng(derive_key(master_seed, stage, sample_index, operator_index)) {}

    /// Next raw 64-bit word (splitmix64).
    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return detail::fmix64(state_);
    }

    /// Uniform double in [0, 1), 53 bits of precision.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n); n must be >= 1 and far below 2^53.
    std::uint64_t uniform_index(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
    }

    /// Normal draw via Box-Muller, with the paired variate cached.
    double normal(double mean, double stddev) {
        if (has_spare_) {
            has_spare_ = false;
            return mean + stddev * spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return mean + stddev * r * std::cos(a);
    }

    /// Independent substream addressed by an index (e.g. one per frame).
    /// Derivation uses the stream key, not the current state, so children
    /// are unaffected by how many draws the parent has made.
    SeededRng child(std::uint64_t index) const {
        return SeededRng(detail::hash_combine(key_, 0x517cc1b727220a95ULL + index));
    }

private:
    explicit SeededRng(std::uint64_t key) : key_(key), state_(key) {}

    static std::uint64_t derive_key(std::uint64_t master_seed, std::string_view stage,
                                    std::uint64_t sample_index, std::uint64_t operator_index) {
        std::uint64_t h = detail::hash_combine(0x8f1bbcdcbfa53e0bULL, master_seed);
        h = detail::hash_combine(h, detail::hash_label(stage));
        h = detail::hash_combine(h, sample_index);
        h = detail::hash_combine(h, operator_index);
        return h;
    }

    std::uint64_t key_;
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Convenience alias for the four-argument stream constructor.
inline SeededRng derive_rng(std::uint64_t master_seed, std::string_view stage,
                            std::uint64_t sample_index, std::uint64_t operator_index) {
    return SeededRng(master_seed, stage, sample_index, operator_index);
}

}  // namespace pulseaug
