#pragma once

#include <array>
#include <string>

#include "pulseaug/rng.hpp"
#include "pulseaug/types.hpp"

namespace pulseaug {

/// Recipe for a synthetic pulse video with a known heart rate. The pulse
/// modulates pixel intensity green-dominantly (weights 0.3 / 1.0 / 0.6);
/// the paired trace carries the same sinusoid at unit amplitude.
struct SynthConfig {
    double hr_bpm = 72.0;  // must lie in [45, 150]
    double fps = 30.0;
    double duration_s = 60.0;
    int size = 72;
    double pulse_amplitude = 0.02;  // in [0, 0.05]
    std::array<double, 3> base_color = {0.35, 0.55, 0.45};
    double motion_drift_px_per_s = 0.0;
    double sigma_s_sq = 0.0;  // optional sensor noise
    double sigma_c_sq = 0.0;
    bool face_region = false;  // paint a centered rectangle on a dark background
};

/// Validates a SynthConfig; throws std::invalid_argument on the first
/// violated constraint.
void validate_synth_config(const SynthConfig& cfg);

/// Builds one sample from the recipe. Deterministic given (cfg, rng).
Sample generate_sample(const SynthConfig& cfg, SeededRng& rng, const std::string& id);

/// Stand-in waveform extractor: per frame, the spatial mean of the green
/// channel over the central half of the frame, mean-subtracted.
SignalTrace oracle_extract(const Sample& sample);

}  // namespace pulseaug
