#include "pulseaug/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pulseaug {

namespace {

inline float clamp01(double v) {
    return static_cast<float>(v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v));
}

}  // namespace

VideoClip center_crop(const VideoClip& clip, int side) {
    if (side < 1) throw std::invalid_argument("crop side must be >= 1");
    if (side > clip.height || side > clip.width)
        throw std::invalid_argument("crop side " + std::to_string(side) +
                                    " exceeds frame size " + std::to_string(clip.width) + "x" +
                                    std::to_string(clip.height));
    const int off_y = (clip.height - side) / 2;
    const int off_x = (clip.width - side) / 2;

    VideoClip out = VideoClip::make(clip.frames, side, side, clip.channels, clip.fps);
    for (int t = 0; t < clip.frames; ++t)
        for (int y = 0; y < side; ++y)
            for (int x = 0; x < side; ++x)
                for (int c = 0; c < clip.channels; ++c)
                    out.at(t, y, x, c) = clip.at(t, y + off_y, x + off_x, c);
    return out;
}

VideoClip resize_bilinear(const VideoClip& clip, int side) {
    if (side < 1) throw std::invalid_argument("resize side must be >= 1");
    if (side == clip.height && side == clip.width) return clip;

    const double scale_y = static_cast<double>(clip.height) / side;
    const double scale_x = static_cast<double>(clip.width) / side;

    VideoClip out = VideoClip::make(clip.frames, side, side, clip.channels, clip.fps);
    for (int t = 0; t < clip.frames; ++t) {
        for (int y = 0; y < side; ++y) {
            double sy = (y + 0.5) * scale_y - 0.5;
            sy = std::clamp(sy, 0.0, static_cast<double>(clip.height - 1));
            const int y0 = static_cast<int>(sy);
            const int y1 = std::min(y0 + 1, clip.height - 1);
            const double fy = sy - y0;
            for (int x = 0; x < side; ++x) {
                double sx = (x + 0.5) * scale_x - 0.5;
                sx = std::clamp(sx, 0.0, static_cast<double>(clip.width - 1));
                const int x0 = static_cast<int>(sx);
                const int x1 = std::min(x0 + 1, clip.width - 1);
                const double fx = sx - x0;
                for (int c = 0; c < clip.channels; ++c) {
                    const double p00 = clip.at(t, y0, x0, c);
                    const double p01 = clip.at(t, y0, x1, c);
                    const double p10 = clip.at(t, y1, x0, c);
                    const double p11 = clip.at(t, y1, x1, c);
                    const double top = p00 + fx * (p01 - p00);
                    const double bot = p10 + fx * (p11 - p10);
                    out.at(t, y, x, c) = clamp01(top + fy * (bot - top));
                }
            }
        }
    }
    return out;
}

VideoClip difference_frames(const VideoClip& clip, DiffMode mode) {
    if (clip.frames < 2) throw std::invalid_argument("difference frames need at least 2 frames");

    VideoClip out = VideoClip::make(clip.frames - 1, clip.height, clip.width, clip.channels,
                                    clip.fps);
    const std::size_t stride = clip.frame_stride();
    for (int t = 0; t + 1 < clip.frames; ++t) {
        const std::size_t cur = static_cast<std::size_t>(t) * stride;
        for (std::size_t i = 0; i < stride; ++i) {
            const double a = clip.data[cur + i];
            const double b = clip.data[cur + stride + i];
            double d = b - a;
            if (mode == DiffMode::Normalized) d /= (b + a + 1e-7);
            out.data[cur + i] = static_cast<float>(d);
        }
    }
    return out;
}

std::vector<Sample> chunk(const Sample& sample, int chunk_len) {
    if (chunk_len < 2) throw std::invalid_argument("chunk length must be >= 2");
    if (sample.trace.size() != static_cast<std::size_t>(sample.clip.frames))
        throw std::invalid_argument("cannot chunk an unpaired sample: " +
                                    std::to_string(sample.clip.frames) + " frames vs " +
                                    std::to_string(sample.trace.size()) + " trace samples");

    const int n_chunks = sample.clip.frames / chunk_len;
    std::vector<Sample> out;
    out.reserve(static_cast<std::size_t>(std::max(n_chunks, 0)));
    const std::size_t stride = sample.clip.frame_stride();

    for (int k = 0; k < n_chunks; ++k) {
        Sample piece;
        piece.id = sample.id + "-c" + std::to_string(k);
        piece.reference_hr = sample.reference_hr;
        piece.clip = VideoClip::make(chunk_len, sample.clip.height, sample.clip.width,
                                     sample.clip.channels, sample.clip.fps);
        const std::size_t begin = static_cast<std::size_t>(k) * chunk_len * stride;
        std::copy(sample.clip.data.begin() + static_cast<std::ptrdiff_t>(begin),
                  sample.clip.data.begin() +
                      static_cast<std::ptrdiff_t>(begin + static_cast<std::size_t>(chunk_len) * stride),
                  piece.clip.data.begin());
        piece.trace.fps = sample.trace.fps;
        piece.trace.values.assign(
            sample.trace.values.begin() + static_cast<std::ptrdiff_t>(k) * chunk_len,
            sample.trace.values.begin() + static_cast<std::ptrdiff_t>(k + 1) * chunk_len);
        out.push_back(std::move(piece));
    }
    return out;
}

std::vector<Sample> preprocess_sample(const Sample& sample, const PreprocessConfig& cfg) {
    Sample work = sample;
    if (cfg.crop < work.clip.height || cfg.crop < work.clip.width)
        work.clip = center_crop(work.clip, cfg.crop);
    work.clip = resize_bilinear(work.clip, cfg.resize);

    work.clip = difference_frames(work.clip, cfg.diff_mode);
    // Difference frame t pairs with trace sample t; the last trace value
    // has no difference frame and is dropped.
    work.trace.values.resize(work.clip.frames);

    return chunk(work, cfg.chunk_len);
}

}  // namespace pulseaug
