#include "pulseaug/validate.hpp"

#include <cmath>

namespace pulseaug {

namespace {

// Passband of the analysis chain expressed in bpm.
constexpr double kMinReferenceHr = 45.0;
constexpr double kMaxReferenceHr = 150.0;

}  // namespace

std::vector<Violation> validate_sample(const Sample& sample) {
    std::vector<Violation> out;
    const VideoClip& clip = sample.clip;

    if (clip.frames < 2)
        out.push_back({"too-few-frames",
                       "clip must have at least 2 frames, has " + std::to_string(clip.frames)});
    if (clip.height < 1)
        out.push_back({"bad-height", "clip height must be >= 1"});
    if (clip.width < 1)
        out.push_back({"bad-width", "clip width must be >= 1"});
    if (clip.channels != 1 && clip.channels != 3)
        out.push_back({"bad-channels",
                       "channel count must be 1 or 3, is " + std::to_string(clip.channels)});
    if (!(clip.fps > 0.0))
        out.push_back({"non-positive-fps", "clip fps must be positive"});

    std::size_t expected = 0;
    if (clip.frames > 0 && clip.height > 0 && clip.width > 0 && clip.channels > 0)
        expected = static_cast<std::size_t>(clip.frames) * clip.height * clip.width * clip.channels;
    if (clip.data.size() != expected) {
        out.push_back({"bad-tensor-size",
                       "frame tensor holds " + std::to_string(clip.data.size()) +
                           " elements, dimensions imply " + std::to_string(expected)});
    } else {
        bool non_finite = false;
        bool out_of_range = false;
        for (float v : clip.data) {
            if (!std::isfinite(v)) {
                non_finite = true;
            } else if (v < 0.0f || v > 1.0f) {
                out_of_range = true;
            }
            if (non_finite && out_of_range) break;
        }
        if (non_finite)
            out.push_back({"non-finite-pixel", "clip contains a NaN or infinite pixel"});
        if (out_of_range)
            out.push_back({"pixel-out-of-range", "clip contains a pixel outside [0, 1]"});
    }

    if (sample.trace.size() != static_cast<std::size_t>(clip.frames))
        out.push_back({"length-mismatch",
                       "trace has " + std::to_string(sample.trace.size()) + " samples, clip has " +
                           std::to_string(clip.frames) + " frames"});
    if (sample.trace.fps != clip.fps)
        out.push_back({"fps-mismatch", "trace fps differs from clip fps"});
    for (double v : sample.trace.values) {
        if (!std::isfinite(v)) {
            out.push_back({"non-finite-signal", "trace contains a non-finite value"});
            break;
        }
    }

    if (sample.reference_hr) {
        double hr = *sample.reference_hr;
        if (!std::isfinite(hr) || hr < kMinReferenceHr || hr > kMaxReferenceHr)
            out.push_back({"reference-hr-out-of-range",
                           "reference_hr must lie in [45, 150] bpm"});
    }
    return out;
}

bool sample_valid(const Sample& sample) { return validate_sample(sample).empty(); }

}  // namespace pulseaug
