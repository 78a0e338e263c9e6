#pragma once

#include <vector>

#include "pulseaug/types.hpp"

namespace pulseaug {

enum class DiffMode { Plain, Normalized };

/// Data-preparation settings: central crop side, bilinear resize target,
/// chunk length in frames, and the frame-difference flavor.
struct PreprocessConfig {
    int crop = 240;
    int resize = 72;
    int chunk_len = 180;
    DiffMode diff_mode = DiffMode::Plain;
};

/// Central square crop; offset = floor((dim - side) / 2) per axis,
/// pixels bit-copied.
VideoClip center_crop(const VideoClip& clip, int side);

/// Resamples each frame to side x side, bilinear, align-corners-false
/// (source coordinate = (dst + 0.5) * scale - 0.5, edges clamped).
VideoClip resize_bilinear(const VideoClip& clip, int side);

/// Consecutive frame differences. Plain: d[t] = x[t+1] - x[t] (values in
/// [-1, 1]); Normalized: d[t] = (x[t+1] - x[t]) / (x[t+1] + x[t] + 1e-7).
/// Output has T-1 frames.
VideoClip difference_frames(const VideoClip& clip, DiffMode mode);

/// Splits into consecutive non-overlapping chunk_len-frame windows with
/// aligned trace windows; the trailing remainder is dropped. Chunk ids
/// are "<parent id>-c<index>".
std::vector<Sample> chunk(const Sample& sample, int chunk_len);

/// Full chain on one sample: crop (if smaller than current size), resize,
/// difference frames (trace trimmed to the matching T-1 prefix), chunk.
std::vector<Sample> preprocess_sample(const Sample& sample, const PreprocessConfig& cfg);

}  // namespace pulseaug
