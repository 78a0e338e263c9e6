#include "pulseaug/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "pulseaug/fft.hpp"

namespace pulseaug {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Expand a monic polynomial from its roots; complex coefficients.
std::vector<std::complex<double>> poly_from_roots(const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> coeffs{{1.0, 0.0}};
    for (const auto& r : roots) {
        coeffs.push_back({0.0, 0.0});
        for (std::size_t i = coeffs.size() - 1; i >= 1; --i) coeffs[i] -= r * coeffs[i - 1];
    }
    return coeffs;
}

// Solve M x = rhs by Gaussian elimination with partial pivoting.
std::vector<double> solve_linear(std::vector<std::vector<double>> m, std::vector<double> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        if (m[col][col] == 0.0) throw std::runtime_error("singular matrix in filter design");
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * x[c];
        x[i] = acc / m[i][i];
    }
    return x;
}

}  // namespace

FilterCoeffs design_butterworth_bandpass(int order, double low_hz, double high_hz, double fs) {
    if (order < 1 || order > 8) throw std::invalid_argument("filter order must be in [1, 8]");
    if (!(low_hz > 0.0) || !(low_hz < high_hz) || !(high_hz < fs / 2.0))
        throw std::invalid_argument("cutoffs must satisfy 0 < low < high < fs/2");

    // Pre-warp the band edges so the bilinear transform lands them exactly.
    const double c = 2.0 * fs;
    const double wl = c * std::tan(kPi * low_hz / fs);
    const double wh = c * std::tan(kPi * high_hz / fs);
    const double bw = wh - wl;
    const double w0sq = wl * wh;

    // Analog lowpass prototype poles on the left unit semicircle.
    std::vector<std::complex<double>> proto(order);
    for (int k = 0; k < order; ++k) {
        const double theta = kPi * (2.0 * k + order + 1.0) / (2.0 * order);
        proto[k] = {std::cos(theta), std::sin(theta)};
    }

    // Lowpass-to-bandpass: each prototype pole splits into two.
    std::vector<std::complex<double>> s_poles;
    s_poles.reserve(2 * order);
    for (const auto& p : proto) {
        const std::complex<double> bp = p * bw;
        const std::complex<double> disc = std::sqrt(bp * bp - 4.0 * w0sq);
        s_poles.push_back((bp + disc) / 2.0);
        s_poles.push_back((bp - disc) / 2.0);
    }

    // Bilinear transform. Analog zeros: `order` of them at s = 0, which map
    // to z = +1; the matching zeros at infinity map to z = -1.
    std::complex<double> gain(std::pow(bw, order), 0.0);
    gain *= std::pow(c, order);
    std::vector<std::complex<double>> z_poles;
    z_poles.reserve(2 * order);
    for (const auto& s : s_poles) {
        z_poles.push_back((c + s) / (c - s));
        gain /= (c - s);
    }

    std::vector<std::complex<double>> z_zeros;
    for (int k = 0; k < order; ++k) {
        z_zeros.push_back({1.0, 0.0});
        z_zeros.push_back({-1.0, 0.0});
    }

    const auto num = poly_from_roots(z_zeros);
    const auto den = poly_from_roots(z_poles);

    FilterCoeffs out;
    out.b.resize(num.size());
    out.a.resize(den.size());
    for (std::size_t i = 0; i < num.size(); ++i) out.b[i] = (gain * num[i]).real();
    for (std::size_t i = 0; i < den.size(); ++i) out.a[i] = den[i].real();
    return out;
}

std::vector<double> lfilter(const std::vector<double>& b, const std::vector<double>& a,
                            const std::vector<double>& x, const std::vector<double>& zi) {
    const std::size_t ntaps = std::max(a.size(), b.size());
    std::vector<double> bb(b), aa(a);
    bb.resize(ntaps, 0.0);
    aa.resize(ntaps, 0.0);
    std::vector<double> z(zi);
    z.resize(ntaps - 1, 0.0);

    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        const double yi = bb[0] * xi + z[0];
        for (std::size_t k = 0; k + 1 < z.size(); ++k)
            z[k] = bb[k + 1] * xi + z[k + 1] - aa[k + 1] * yi;
        z[z.size() - 1] = bb[ntaps - 1] * xi - aa[ntaps - 1] * yi;
        y[i] = yi;
    }
    return y;
}

std::vector<double> lfilter_zi(const std::vector<double>& b, const std::vector<double>& a) {
    const std::size_t ntaps = std::max(a.size(), b.size());
    std::vector<double> bb(b), aa(a);
    bb.resize(ntaps, 0.0);
    aa.resize(ntaps, 0.0);
    const std::size_t n = ntaps - 1;

    // Solve (I - A^T) zi = B, A the companion matrix of a; the resulting
    // state makes a step input produce its steady-state output immediately.
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] += 1.0;
        m[i][0] += aa[i + 1];
        if (i + 1 < n) m[i][i + 1] -= 1.0;
    }
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = bb[i + 1] - aa[i + 1] * bb[0];
    return solve_linear(std::move(m), std::move(rhs));
}

SignalTrace butterworth_bandpass(const SignalTrace& trace, const FilterConfig& cfg) {
    if (!(trace.fps > 0.0)) throw std::invalid_argument("trace fps must be positive");
    const auto coeffs = design_butterworth_bandpass(cfg.order, cfg.low_hz, cfg.high_hz, trace.fps);
    const std::size_t ntaps = std::max(coeffs.a.size(), coeffs.b.size());
    const std::size_t edge = 3 * (ntaps - 1);
    const std::size_t min_len = 3 * static_cast<std::size_t>(cfg.order + 1);
    if (trace.size() <= std::max(min_len, edge))
        throw std::invalid_argument("trace too short to filter: " + std::to_string(trace.size()) +
                                    " samples");

    const std::vector<double>& x = trace.values;
    const auto zi = lfilter_zi(coeffs.b, coeffs.a);
    auto scaled = [&zi](double v) {
        std::vector<double> z(zi);
        for (double& s : z) s *= v;
        return z;
    };

    SignalTrace out;
    out.fps = trace.fps;

    if (!cfg.zero_phase) {
        out.values = lfilter(coeffs.b, coeffs.a, x, scaled(x.front()));
        return out;
    }

    // Odd-reflect both edges, filter forward, then backward, then trim.
    const std::size_t n = x.size();
    std::vector<double> ext;
    ext.reserve(n + 2 * edge);
    for (std::size_t i = 0; i < edge; ++i) ext.push_back(2.0 * x[0] - x[edge - i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (std::size_t i = 0; i < edge; ++i) ext.push_back(2.0 * x[n - 1] - x[n - 2 - i]);

    std::vector<double> y = lfilter(coeffs.b, coeffs.a, ext, scaled(ext.front()));
    std::reverse(y.begin(), y.end());
    y = lfilter(coeffs.b, coeffs.a, y, scaled(y.front()));
    std::reverse(y.begin(), y.end());

    out.values.assign(y.begin() + static_cast<std::ptrdiff_t>(edge),
                      y.begin() + static_cast<std::ptrdiff_t>(edge + n));
    return out;
}

HrEstimate estimate_hr_fft(const SignalTrace& trace, const HrBand& band,
                           const SpectrumOptions& opts) {
    if (trace.size() < 2) throw std::invalid_argument("trace must have at least 2 samples");
    if (!(trace.fps > 0.0)) throw std::invalid_argument("trace fps must be positive");
    if (!(band.low_hz >= 0.0) || !(band.high_hz > band.low_hz))
        throw std::invalid_argument("invalid frequency band");

    std::vector<double> values = trace.values;
    if (opts.hann) {
        const std::size_t n = values.size();
        for (std::size_t i = 0; i < n; ++i)
            values[i] *= 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                               static_cast<double>(n - 1)));
    }

    const auto mags = magnitude_spectrum(values, opts.pad_factor);
    const double n_fft = static_cast<double>(values.size()) * opts.pad_factor;

    // Inclusive band edges; the +/- guard keeps exact-edge bins inside.
    const long k_lo =
        std::max(0L, static_cast<long>(std::ceil(band.low_hz * n_fft / trace.fps - 1e-9)));
    const long k_hi =
        std::min(static_cast<long>(mags.size()) - 1,
                 static_cast<long>(std::floor(band.high_hz * n_fft / trace.fps + 1e-9)));
    if (k_lo > k_hi) throw std::invalid_argument("no FFT bin inside the requested band");

    long peak = k_lo;
    for (long k = k_lo + 1; k <= k_hi; ++k)
        if (mags[static_cast<std::size_t>(k)] > mags[static_cast<std::size_t>(peak)]) peak = k;

    HrEstimate est;
    est.peak_bin = static_cast<int>(peak);
    est.bpm = 60.0 * (static_cast<double>(peak) * trace.fps) / n_fft;
    est.resolution_bpm = 60.0 * trace.fps / n_fft;
    return est;
}

MetricsReport compute_metrics(const std::vector<double>& predicted,
                              const std::vector<double>& reference) {
    if (predicted.size() != reference.size())
        throw std::invalid_argument("predicted and reference lengths differ: " +
                                    std::to_string(predicted.size()) + " vs " +
                                    std::to_string(reference.size()));
    if (predicted.empty()) throw std::invalid_argument("metrics require at least one pair");

    const std::size_t n = predicted.size();
    double abs_sum = 0.0, sq_sum = 0.0, ape_sum = 0.0;
    bool mape_defined = true;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = predicted[i] - reference[i];
        abs_sum += std::abs(d);
        sq_sum += d * d;
        if (reference[i] == 0.0)
            mape_defined = false;
        else
            ape_sum += std::abs(d) / std::abs(reference[i]);
    }

    MetricsReport rep;
    rep.n = n;
    rep.mae = abs_sum / static_cast<double>(n);
    rep.rmse = std::sqrt(sq_sum / static_cast<double>(n));
    if (mape_defined) rep.mape = 100.0 * ape_sum / static_cast<double>(n);

    if (n >= 2) {
        double mp = 0.0, mr = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mp += predicted[i];
            mr += reference[i];
        }
        mp /= static_cast<double>(n);
        mr /= static_cast<double>(n);
        double cov = 0.0, vp = 0.0, vr = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dp = predicted[i] - mp;
            const double dr = reference[i] - mr;
            cov += dp * dr;
            vp += dp * dp;
            vr += dr * dr;
        }
        if (vp > 0.0 && vr > 0.0)
            rep.pearson = std::clamp(cov / (std::sqrt(vp) * std::sqrt(vr)), -1.0, 1.0);
    }
    return rep;
}

}  // namespace pulseaug
