#include "pulseaug/video_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace pulseaug {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_geometric(const GeometricParams& params) {
    if (!(std::abs(params.theta) <= kPi)) throw std::invalid_argument("|theta| must be <= pi");
    if (!std::isfinite(params.translate_px) || !std::isfinite(params.shear))
        throw std::invalid_argument("geometric parameters must be finite");
    if (!(params.fill >= 0.0 && params.fill <= 1.0))
        throw std::invalid_argument("fill value must lie in [0, 1]");
}

inline float clamp01(double v) {
    return static_cast<float>(v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v));
}

// Fetch with constant fill outside the frame.
inline double fetch(const VideoClip& clip, int t, int y, int x, int c, double fill) {
    if (x < 0 || x >= clip.width || y < 0 || y >= clip.height) return fill;
    return clip.at(t, y, x, c);
}

// Bilinear sample in lerp form; constants pass through exactly and the
// weight-zero neighbor never contaminates exact-integer coordinates.
inline double bilinear(const VideoClip& clip, int t, double sx, double sy, int c, double fill) {
    // Fully outside: every tap is fill. Also keeps the int casts bounded.
    if (!(sx > -1.0) || sx >= clip.width || !(sy > -1.0) || sy >= clip.height) return fill;
    const double fx0 = std::floor(sx);
    const double fy0 = std::floor(sy);
    const int x0 = static_cast<int>(fx0);
    const int y0 = static_cast<int>(fy0);
    const double fx = sx - fx0;
    const double fy = sy - fy0;

    const double p00 = fetch(clip, t, y0, x0, c, fill);
    const double p01 = fetch(clip, t, y0, x0 + 1, c, fill);
    const double p10 = fetch(clip, t, y0 + 1, x0, c, fill);
    const double p11 = fetch(clip, t, y0 + 1, x0 + 1, c, fill);

    const double top = p00 + fx * (p01 - p00);
    const double bot = p10 + fx * (p11 - p10);
    return top + fy * (bot - top);
}

}  // namespace

void geometric_forward_map(GeoKind kind, const GeometricParams& params, int width, int height,
                           double x, double y, double& out_x, double& out_y) {
    switch (kind) {
        case GeoKind::Rotate: {
            const double cx = (width - 1) / 2.0;
            const double cy = (height - 1) / 2.0;
            const double dx = x - cx;
            const double dy = y - cy;
            const double c = std::cos(params.theta);
            const double s = std::sin(params.theta);
            out_x = cx + dx * c - dy * s;
            out_y = cy + dx * s + dy * c;
            return;
        }
        case GeoKind::Translate:
            out_x = params.axis == Axis::X ? x + params.translate_px : x;
            out_y = params.axis == Axis::Y ? y + params.translate_px : y;
            return;
        case GeoKind::Shear:
            if (params.axis == Axis::X) {
                out_x = x + params.shear * y;
                out_y = y;
            } else {
                out_x = x;
                out_y = params.shear * x + y;
            }
            return;
        case GeoKind::Flip:
            out_x = static_cast<double>(width - 1) - x;
            out_y = y;
            return;
    }
    throw std::invalid_argument("unknown geometric kind");
}

void geometric_inverse_map(GeoKind kind, const GeometricParams& params, int width, int height,
                           double x, double y, double& out_x, double& out_y) {
    GeometricParams inv = params;
    switch (kind) {
        case GeoKind::Rotate:
            inv.theta = -params.theta;
            break;
        case GeoKind::Translate:
            inv.translate_px = -params.translate_px;
            break;
        case GeoKind::Shear:
            inv.shear = -params.shear;
            break;
        case GeoKind::Flip:
            break;  // involution
    }
    geometric_forward_map(kind, inv, width, height, x, y, out_x, out_y);
}

VideoClip warp_affine(const VideoClip& clip, const GeometricParams& params, GeoKind kind) {
    check_geometric(params);

    VideoClip out = clip;
    const int T = clip.frames, H = clip.height, W = clip.width, C = clip.channels;

    if (kind == GeoKind::Flip) {
        // Pure column permutation; keeps flip an exact involution.
        for (int t = 0; t < T; ++t)
            for (int y = 0; y < H; ++y)
                for (int x = 0; x < W; ++x)
                    for (int c = 0; c < C; ++c) out.at(t, y, x, c) = clip.at(t, y, W - 1 - x, c);
        return out;
    }

    // Hoist the inverse map into affine form: src = A * dst + b. Identity
    // parameters and whole-pixel translations stay exact under this
    // evaluation order, so those paths remain bit-exact copies.
    double a00 = 1.0, a01 = 0.0, a10 = 0.0, a11 = 1.0, b0 = 0.0, b1 = 0.0;
    switch (kind) {
        case GeoKind::Rotate: {
            const double c = std::cos(-params.theta);
            const double s = std::sin(-params.theta);
            const double cx = (W - 1) / 2.0;
            const double cy = (H - 1) / 2.0;
            a00 = c;
            a01 = -s;
            a10 = s;
            a11 = c;
            b0 = cx - (a00 * cx + a01 * cy);
            b1 = cy - (a10 * cx + a11 * cy);
            break;
        }
        case GeoKind::Translate:
            if (params.axis == Axis::X)
                b0 = -params.translate_px;
            else
                b1 = -params.translate_px;
            break;
        case GeoKind::Shear:
            if (params.axis == Axis::X)
                a01 = -params.shear;
            else
                a10 = -params.shear;
            break;
        case GeoKind::Flip:
            break;  // handled above
    }

    for (int t = 0; t < T; ++t) {
        for (int y = 0; y < H; ++y) {
            const double row_x = a01 * y + b0;
            const double row_y = a11 * y + b1;
            for (int x = 0; x < W; ++x) {
                const double sx = a00 * x + row_x;
                const double sy = a10 * x + row_y;
                for (int c = 0; c < C; ++c)
                    out.at(t, y, x, c) = clamp01(bilinear(clip, t, sx, sy, c, params.fill));
            }
        }
    }
    return out;
}

VideoClip random_erase(const VideoClip& clip, SeededRng& rng, int erase_size) {
    if (erase_size < 1) throw std::invalid_argument("erase size must be >= 1");
    if (clip.height < erase_size || clip.width < erase_size)
        throw std::invalid_argument("frame smaller than the erase region (" +
                                    std::to_string(erase_size) + "x" +
                                    std::to_string(erase_size) + ")");

    VideoClip out = clip;
    for (int t = 0; t < clip.frames; ++t) {
        SeededRng frame_rng = rng.child(static_cast<std::uint64_t>(t));
        const int top = static_cast<int>(
            frame_rng.uniform_index(static_cast<std::uint64_t>(clip.height - erase_size + 1)));
        const int left = static_cast<int>(
            frame_rng.uniform_index(static_cast<std::uint64_t>(clip.width - erase_size + 1)));
        for (int y = top; y < top + erase_size; ++y)
            for (int x = left; x < left + erase_size; ++x)
                for (int c = 0; c < clip.channels; ++c)
                    out.at(t, y, x, c) = static_cast<float>(frame_rng.uniform());
    }
    return out;
}

VideoClip adjust_brightness(const VideoClip& clip, double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor))
        throw std::invalid_argument("brightness factor must be positive");
    VideoClip out = clip;
    for (float& v : out.data) v = clamp01(factor * static_cast<double>(v));
    return out;
}

VideoClip adjust_saturation(const VideoClip& clip, double factor) {
    if (clip.channels != 3)
        throw std::invalid_argument("saturation adjustment requires a 3-channel clip");
    if (!(factor >= 0.0) || !std::isfinite(factor))
        throw std::invalid_argument("saturation factor must be >= 0");

    VideoClip out = clip;
    const std::size_t pixels = clip.data.size() / 3;
    for (std::size_t p = 0; p < pixels; ++p) {
        const std::size_t i = p * 3;
        const double r = clip.data[i], g = clip.data[i + 1], b = clip.data[i + 2];
        const double luma = 0.299 * r + 0.587 * g + 0.114 * b;
        out.data[i] = clamp01(luma + factor * (r - luma));
        out.data[i + 1] = clamp01(luma + factor * (g - luma));
        out.data[i + 2] = clamp01(luma + factor * (b - luma));
    }
    return out;
}

namespace detail {

VideoClip camera_noise_unclamped(const VideoClip& clip, double sigma_s_sq, double sigma_c_sq,
                                 SeededRng& rng) {
    if (!(sigma_s_sq >= 0.0) || !(sigma_c_sq >= 0.0))
        throw std::invalid_argument("noise variance coefficients must be >= 0");

    VideoClip out = clip;
    if (sigma_s_sq == 0.0 && sigma_c_sq == 0.0) return out;

    const std::size_t stride = clip.frame_stride();
    for (int t = 0; t < clip.frames; ++t) {
        SeededRng frame_rng = rng.child(static_cast<std::uint64_t>(t));
        const std::size_t base = static_cast<std::size_t>(t) * stride;
        for (std::size_t i = 0; i < stride; ++i) {
            const double x = clip.data[base + i];
            const double stddev = std::sqrt(sigma_s_sq * x + sigma_c_sq);
            out.data[base + i] = static_cast<float>(x + frame_rng.normal(0.0, stddev));
        }
    }
    return out;
}

}  // namespace detail

VideoClip camera_noise(const VideoClip& clip, double sigma_s_sq, double sigma_c_sq,
                       SeededRng& rng) {
    VideoClip out = detail::camera_noise_unclamped(clip, sigma_s_sq, sigma_c_sq, rng);
    for (float& v : out.data) v = clamp01(v);
    return out;
}

}  // namespace pulseaug
