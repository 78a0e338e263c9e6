#pragma once

#include "pulseaug/rng.hpp"
#include "pulseaug/types.hpp"

namespace pulseaug {

enum class Axis { X, Y };

enum class GeoKind { Rotate, Translate, Shear, Flip };

/// Parameters for one geometric transform. The drawn value lives in the
/// field matching the kind; `axis` selects the direction for translate
/// and shear; `fill` is the value written where the inverse map leaves
/// the frame.
struct GeometricParams {
    double theta = 0.0;         // radians, |theta| <= pi
    double translate_px = 0.0;  // signed pixels
    double shear = 0.0;         // dimensionless signed slope
    Axis axis = Axis::X;
    double fill = 0.0;  // in [0, 1]
};

/// Appearance-operator parameters and their pipeline draw ranges.
struct AppearanceParams {
    int erase_size = 7;
    double brightness_range[2] = {0.75, 1.25};
    double saturation_range[2] = {0.75, 1.25};
    double sigma_s_sq = 0.0004;  // signal-dependent noise variance slope
    double sigma_c_sq = 0.0004;  // signal-independent noise variance
};

/// Forward coordinate map of a geometric transform, (x, y) -> (x', y').
/// Rotation is about the frame center ((W-1)/2, (H-1)/2); translate,
/// shear and flip follow the plain planar forms (x+m, y), (x+m*y, y),
/// (W-1-x, y) and their Y-axis counterparts.
void geometric_forward_map(GeoKind kind, const GeometricParams& params, int width, int height,
                           double x, double y, double& out_x, double& out_y);

/// Inverse of geometric_forward_map (used for resampling).
void geometric_inverse_map(GeoKind kind, const GeometricParams& params, int width, int height,
                           double x, double y, double& out_x, double& out_y);

/// Resamples every frame under the chosen coordinate map. Inverse mapping
/// with bilinear interpolation; sources outside the frame take
/// params.fill. Dimensions are unchanged and the paired trace is never
/// touched by any video operator.
VideoClip warp_affine(const VideoClip& clip, const GeometricParams& params, GeoKind kind);

/// Replaces one 7x7 (erase_size) square per frame, at an independently
/// drawn corner, with i.i.d. uniform [0,1] values across all channels.
VideoClip random_erase(const VideoClip& clip, SeededRng& rng, int erase_size = 7);

/// clamp(factor * v, 0, 1) on every pixel; one factor for the whole clip.
VideoClip adjust_brightness(const VideoClip& clip, double factor);

/// Moves each pixel toward/away from its Rec.601 luma:
/// out = clamp(L + factor * (channel - L), 0, 1). Requires 3 channels.
VideoClip adjust_saturation(const VideoClip& clip, double factor);

/// Sensor noise with signal-dependent variance: each pixel x becomes
/// clamp(x + n, 0, 1), n ~ N(0, sigma_s_sq * x + sigma_c_sq).
VideoClip camera_noise(const VideoClip& clip, double sigma_s_sq, double sigma_c_sq, SeededRng& rng);

namespace detail {
/// camera_noise without the final clamp; used to measure the raw noise
/// statistics that the clamp would censor at the range edges.
VideoClip camera_noise_unclamped(const VideoClip& clip, double sigma_s_sq, double sigma_c_sq,
                                 SeededRng& rng);
}  // namespace detail

}  // namespace pulseaug
