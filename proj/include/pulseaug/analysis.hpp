#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pulseaug/types.hpp"

namespace pulseaug {

/// Bandpass filter settings. Defaults match the heart-rate band used by
/// the rest of the toolchain: 2nd-order Butterworth, 0.75-2.5 Hz,
/// applied forward-backward (zero phase).
struct FilterConfig {
    int order = 2;
    double low_hz = 0.75;
    double high_hz = 2.5;
    bool zero_phase = true;
};

/// Digital bandpass coefficients, b/a normalized so a[0] == 1.
struct FilterCoeffs {
    std::vector<double> b;
    std::vector<double> a;
};

/// Designs the digital Butterworth bandpass for the given sample rate:
/// analog prototype -> lowpass-to-bandpass transform -> bilinear transform
/// with frequency pre-warping.
FilterCoeffs design_butterworth_bandpass(int order, double low_hz, double high_hz, double fs);

/// Single forward IIR pass (direct form II transposed) with initial state
/// zi scaled by the caller.
std::vector<double> lfilter(const std::vector<double>& b, const std::vector<double>& a,
                            const std::vector<double>& x, const std::vector<double>& zi);

/// Initial filter state that makes the step response start at steady
/// state, eliminating the startup transient for constant inputs.
std::vector<double> lfilter_zi(const std::vector<double>& b, const std::vector<double>& a);

/// Bandpass-filters the trace. zero_phase = true runs the filter forward
/// and backward over an odd-reflected extension of length
/// 3 * (max(len(a), len(b)) - 1) at each edge; output length equals input
/// length either way.
SignalTrace butterworth_bandpass(const SignalTrace& trace, const FilterConfig& cfg);

/// Frequency band restricting the spectral peak search, in Hz.
struct HrBand {
    double low_hz = 0.75;
    double high_hz = 2.5;
};

struct SpectrumOptions {
    int pad_factor = 1;  // N_fft = pad_factor * trace length
    bool hann = false;   // apply a Hann window before the transform
};

struct HrEstimate {
    double bpm = 0.0;
    int peak_bin = 0;
    double resolution_bpm = 0.0;  // 60 * fps / N_fft
};

/// Heart rate from the magnitude spectrum: the peak bin within the band,
/// converted to bpm. Ties resolve to the lowest bin.
HrEstimate estimate_hr_fft(const SignalTrace& trace, const HrBand& band = {},
                           const SpectrumOptions& opts = {});

/// Error metrics over paired predicted vs reference heart rates.
/// mape/pearson are unset when their preconditions fail (a reference of
/// zero, a constant series) rather than propagating NaN.
struct MetricsReport {
    double mae = 0.0;
    double rmse = 0.0;
    std::optional<double> mape;     // percent
    std::optional<double> pearson;  // in [-1, 1]
    std::size_t n = 0;
};

MetricsReport compute_metrics(const std::vector<double>& predicted,
                              const std::vector<double>& reference);

}  // namespace pulseaug
