#pragma once

#include "pulseaug/rng.hpp"
#include "pulseaug/types.hpp"

namespace pulseaug {

/// Parameter ranges for the four waveform operators, as drawn by the
/// pipeline. Direct calls to the operators take concrete values instead.
struct SignalOpParams {
    double gaussian_variance = 0.5;
    double wander_amplitude_range[2] = {0.0, 0.2};
    double wander_freq_range_hz[2] = {0.0, 0.5};
    double scale_range[2] = {0.75, 1.25};
    double warp_sigma_range[2] = {0.0, 0.25};  // drawn from the half-open (0, 0.25]
    int warp_knots = 4;
};

/// Adds i.i.d. zero-mean Gaussian noise with the given variance.
SignalTrace add_gaussian_noise(const SignalTrace& trace, double variance, SeededRng& rng);

/// Adds amplitude * sin(2*pi*freq_hz*t/fps + phase) to the trace.
/// Models slow additive drift of the waveform baseline.
SignalTrace add_baseline_wander(const SignalTrace& trace, double amplitude, double freq_hz,
                                double phase);

/// Multiplies the whole trace by a scalar factor.
SignalTrace scale_signal(const SignalTrace& trace, double factor);

/// Multiplies the trace by a smooth random curve: `knots` control points
/// drawn from N(1, sigma) are placed evenly over [0, T-1] and joined by a
/// natural cubic spline.
SignalTrace magnitude_warp(const SignalTrace& trace, double sigma, int knots, SeededRng& rng);

/// The multiplier curve used by magnitude_warp, exposed so tests can pin
/// curve values against the drawn control points.
std::vector<double> warp_multiplier_curve(std::size_t length, const std::vector<double>& knot_values);

/// Natural cubic spline through (xs, ys), evaluated at x. xs must be
/// strictly increasing with at least two entries.
double natural_cubic_spline_eval(const std::vector<double>& xs, const std::vector<double>& ys,
                                 double x);

}  // namespace pulseaug
