#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pulseaug {

/// Frame tensor in T x H x W x C layout (row-major, C fastest).
/// Pixel values are normalized intensities in [0, 1].
struct VideoClip {
    std::vector<float> data;
    int frames = 0;
    int height = 0;
    int width = 0;
    int channels = 0;
    double fps = 0.0;

    static VideoClip make(int t, int h, int w, int c, double fps, float value = 0.0f) {
        VideoClip clip;
        clip.frames = t;
        clip.height = h;
        clip.width = w;
        clip.channels = c;
        clip.fps = fps;
        clip.data.assign(static_cast<std::size_t>(t) * h * w * c, value);
        return clip;
    }

    std::size_t index(int t, int y, int x, int c) const {
        return ((static_cast<std::size_t>(t) * height + y) * width + x) * channels + c;
    }
    float at(int t, int y, int x, int c) const { return data[index(t, y, x, c)]; }
    float& at(int t, int y, int x, int c) { return data[index(t, y, x, c)]; }

    std::size_t frame_stride() const {
        return static_cast<std::size_t>(height) * width * channels;
    }
    std::size_t size() const { return data.size(); }
};

/// 1-D waveform sampled at the owning clip's frame rate, one value per frame.
struct SignalTrace {
    std::vector<double> values;
    double fps = 0.0;

    std::size_t size() const { return values.size(); }
};

/// One paired unit: clip + aligned trace + metadata.
struct Sample {
    VideoClip clip;
    SignalTrace trace;
    std::string id;
    std::optional<double> reference_hr;  // beats per minute
};

}  // namespace pulseaug
