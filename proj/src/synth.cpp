#include "pulseaug/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pulseaug/video_ops.hpp"

namespace pulseaug {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
constexpr std::array<double, 3> kChannelWeights = {0.3, 1.0, 0.6};
constexpr double kBackground = 0.05;

inline float clamp01(double v) {
    return static_cast<float>(v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v));
}

}  // namespace

void validate_synth_config(const SynthConfig& cfg) {
    if (!(cfg.hr_bpm >= 45.0 && cfg.hr_bpm <= 150.0))
        throw std::invalid_argument("hr_bpm must lie in [45, 150]");
    if (!(cfg.fps > 0.0)) throw std::invalid_argument("fps must be positive");
    if (!(cfg.duration_s > 0.0)) throw std::invalid_argument("duration_s must be positive");
    if (cfg.size < 1) throw std::invalid_argument("size must be >= 1");
    if (!(cfg.pulse_amplitude >= 0.0 && cfg.pulse_amplitude <= 0.05))
        throw std::invalid_argument("pulse_amplitude must lie in [0, 0.05]");
    double max_base = 0.0;
    for (double c : cfg.base_color) {
        if (!(c >= 0.0 && c <= 1.0))
            throw std::invalid_argument("base_color channels must lie in [0, 1]");
        max_base = std::max(max_base, c);
    }
    if (cfg.pulse_amplitude + max_base > 1.0)
        throw std::invalid_argument("pulse_amplitude + max(base_color) must be <= 1");
    if (!(cfg.sigma_s_sq >= 0.0) || !(cfg.sigma_c_sq >= 0.0))
        throw std::invalid_argument("sensor noise variances must be >= 0");
    if (!std::isfinite(cfg.motion_drift_px_per_s))
        throw std::invalid_argument("motion drift must be finite");
    const int frames = static_cast<int>(std::llround(cfg.fps * cfg.duration_s));
    if (frames < 2) throw std::invalid_argument("fps * duration_s must yield at least 2 frames");
}

Sample generate_sample(const SynthConfig& cfg, SeededRng& rng, const std::string& id) {
    validate_synth_config(cfg);

    const int frames = static_cast<int>(std::llround(cfg.fps * cfg.duration_s));
    const int side = cfg.size;
    const double freq_hz = cfg.hr_bpm / 60.0;

    Sample sample;
    sample.id = id;
    sample.reference_hr = cfg.hr_bpm;
    sample.clip = VideoClip::make(frames, side, side, 3, cfg.fps);
    sample.trace.fps = cfg.fps;
    sample.trace.values.resize(frames);

    // Skin region: whole frame, or a centered half-size rectangle that can
    // drift horizontally over a dark background.
    const int face_side = std::max(1, side / 2);
    const int face_top = (side - face_side) / 2;
    const int face_left0 = (side - face_side) / 2;

    for (int t = 0; t < frames; ++t) {
        const double phase = kTwoPi * freq_hz * static_cast<double>(t) / cfg.fps;
        const double pulse = std::sin(phase);
        sample.trace.values[t] = pulse;

        std::array<float, 3> skin;
        for (int c = 0; c < 3; ++c)
            skin[c] = clamp01(cfg.base_color[c] +
                              cfg.pulse_amplitude * pulse * kChannelWeights[c]);

        if (!cfg.face_region) {
            float* frame = sample.clip.data.data() + static_cast<std::size_t>(t) *
                                                        sample.clip.frame_stride();
            const std::size_t pixels = static_cast<std::size_t>(side) * side;
            for (std::size_t p = 0; p < pixels; ++p)
                for (int c = 0; c < 3; ++c) frame[p * 3 + c] = skin[c];
        } else {
            const int drift = static_cast<int>(
                std::llround(cfg.motion_drift_px_per_s * static_cast<double>(t) / cfg.fps));
            const int left = face_left0 + drift;
            for (int y = 0; y < side; ++y) {
                for (int x = 0; x < side; ++x) {
                    const bool in_face = y >= face_top && y < face_top + face_side &&
                                         x >= left && x < left + face_side;
                    for (int c = 0; c < 3; ++c)
                        sample.clip.at(t, y, x, c) =
                            in_face ? skin[c] : static_cast<float>(kBackground);
                }
            }
        }
    }

    if (cfg.sigma_s_sq > 0.0 || cfg.sigma_c_sq > 0.0)
        sample.clip = camera_noise(sample.clip, cfg.sigma_s_sq, cfg.sigma_c_sq, rng);
    return sample;
}

SignalTrace oracle_extract(const Sample& sample) {
    const VideoClip& clip = sample.clip;
    if (clip.channels != 3)
        throw std::invalid_argument("oracle extraction requires a 3-channel clip");

    const int y0 = clip.height / 4;
    const int x0 = clip.width / 4;
    const int h = std::max(1, clip.height / 2);
    const int w = std::max(1, clip.width / 2);

    SignalTrace trace;
    trace.fps = clip.fps;
    trace.values.resize(clip.frames);

    double total = 0.0;
    for (int t = 0; t < clip.frames; ++t) {
        double acc = 0.0;
        for (int y = y0; y < y0 + h; ++y)
            for (int x = x0; x < x0 + w; ++x) acc += clip.at(t, y, x, 1);
        const double mean = acc / (static_cast<double>(h) * w);
        trace.values[t] = mean;
        total += mean;
    }
    const double grand_mean = total / clip.frames;
    for (double& v : trace.values) v -= grand_mean;
    return trace;
}

}  // namespace pulseaug
