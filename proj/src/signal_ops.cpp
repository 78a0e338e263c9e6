#include "pulseaug/signal_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pulseaug {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

// Second derivatives of the natural cubic spline (zero curvature at both
// ends), via the Thomas algorithm on the tridiagonal system.
std::vector<double> spline_second_derivatives(const std::vector<double>& xs,
                                              const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    std::vector<double> m(n, 0.0);
    if (n < 3) return m;

    std::vector<double> diag(n - 2), upper(n - 2), rhs(n - 2);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = xs[i] - xs[i - 1];
        const double h1 = xs[i + 1] - xs[i];
        diag[i - 1] = 2.0 * (h0 + h1);
        upper[i - 1] = h1;
        rhs[i - 1] = 6.0 * ((ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0);
    }
    for (std::size_t i = 1; i < diag.size(); ++i) {
        const double lower = xs[i + 1] - xs[i];  // h0 of row i
        const double f = lower / diag[i - 1];
        diag[i] -= f * upper[i - 1];
        rhs[i] -= f * rhs[i - 1];
    }
    for (std::size_t i = diag.size(); i-- > 0;) {
        double acc = rhs[i];
        if (i + 1 < diag.size()) acc -= upper[i] * m[i + 2];
        m[i + 1] = acc / diag[i];
    }
    return m;
}

}  // namespace

double natural_cubic_spline_eval(const std::vector<double>& xs, const std::vector<double>& ys,
                                 double x) {
    if (xs.size() < 2 || xs.size() != ys.size())
        throw std::invalid_argument("spline needs at least two matching knots");
    const auto m = spline_second_derivatives(xs, ys);

    std::size_t seg = 0;
    while (seg + 2 < xs.size() && x > xs[seg + 1]) ++seg;
    const double h = xs[seg + 1] - xs[seg];
    const double a = (xs[seg + 1] - x) / h;
    const double b = (x - xs[seg]) / h;
    return a * ys[seg] + b * ys[seg + 1] +
           ((a * a * a - a) * m[seg] + (b * b * b - b) * m[seg + 1]) * h * h / 6.0;
}

SignalTrace add_gaussian_noise(const SignalTrace& trace, double variance, SeededRng& rng) {
    if (!(variance >= 0.0) || !std::isfinite(variance))
        throw std::invalid_argument("gaussian noise variance must be >= 0");
    SignalTrace out = trace;
    if (variance == 0.0) return out;
    const double stddev = std::sqrt(variance);
    for (double& v : out.values) v += rng.normal(0.0, stddev);
    return out;
}

SignalTrace add_baseline_wander(const SignalTrace& trace, double amplitude, double freq_hz,
                                double phase) {
    if (!(amplitude >= 0.0 && amplitude <= 0.2))
        throw std::invalid_argument("wander amplitude must lie in [0, 0.2]");
    if (!(freq_hz >= 0.0 && freq_hz <= 0.5))
        throw std::invalid_argument("wander frequency must lie in [0, 0.5] Hz");
    if (!(phase >= 0.0 && phase < kTwoPi))
        throw std::invalid_argument("wander phase must lie in [0, 2*pi)");
    if (!(trace.fps > 0.0)) throw std::invalid_argument("trace fps must be positive");

    SignalTrace out = trace;
    if (amplitude == 0.0) return out;
    for (std::size_t t = 0; t < out.values.size(); ++t)
        out.values[t] +=
            amplitude * std::sin(kTwoPi * freq_hz * static_cast<double>(t) / trace.fps + phase);
    return out;
}

SignalTrace scale_signal(const SignalTrace& trace, double factor) {
    if (!std::isfinite(factor)) throw std::invalid_argument("scale factor must be finite");
    SignalTrace out = trace;
    for (double& v : out.values) v *= factor;
    return out;
}

std::vector<double> warp_multiplier_curve(std::size_t length,
                                          const std::vector<double>& knot_values) {
    const std::size_t knots = knot_values.size();
    if (knots < 2) throw std::invalid_argument("magnitude warp needs at least 2 knots");
    if (length < 2) throw std::invalid_argument("magnitude warp needs at least 2 samples");

    std::vector<double> xs(knots);
    for (std::size_t k = 0; k < knots; ++k)
        xs[k] = static_cast<double>(k) * static_cast<double>(length - 1) /
                static_cast<double>(knots - 1);

    std::vector<double> curve(length);
    for (std::size_t t = 0; t < length; ++t)
        curve[t] = natural_cubic_spline_eval(xs, knot_values, static_cast<double>(t));
    return curve;
}

SignalTrace magnitude_warp(const SignalTrace& trace, double sigma, int knots, SeededRng& rng) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("warp sigma must be positive");
    if (knots < 2) throw std::invalid_argument("magnitude warp needs at least 2 knots");

    std::vector<double> knot_values(static_cast<std::size_t>(knots));
    for (double& k : knot_values) k = rng.normal(1.0, sigma);

    const auto curve = warp_multiplier_curve(trace.size(), knot_values);
    SignalTrace out = trace;
    for (std::size_t t = 0; t < out.values.size(); ++t) out.values[t] *= curve[t];
    return out;
}

}  // namespace pulseaug
