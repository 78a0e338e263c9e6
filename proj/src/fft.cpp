#include "pulseaug/fft.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace pulseaug {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& v : a) v *= inv;
    }
}

namespace {

// Bluestein's algorithm: expresses an arbitrary-N DFT as a convolution,
// evaluated with power-of-two FFTs. Keeps exact N-point bin semantics.
std::vector<std::complex<double>> dft_bluestein(const std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    const std::size_t m = next_pow2(2 * n - 1);

    // chirp[k] = exp(-i pi k^2 / n); k^2 taken mod 2n to keep the angle bounded.
    std::vector<std::complex<double>> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t k2 = static_cast<std::size_t>(
            (static_cast<unsigned long long>(k) * k) % (2ull * n));
        const double angle = -kPi * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = {std::cos(angle), std::sin(angle)};
    }

    std::vector<std::complex<double>> a(m, {0.0, 0.0});
    std::vector<std::complex<double>> b(m, {0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);

    fft_pow2(a, false);
    fft_pow2(b, false);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_pow2(a, true);

    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
    return out;
}

}  // namespace

std::vector<std::complex<double>> dft(std::vector<std::complex<double>> x) {
    if (x.empty()) return x;
    if (is_pow2(x.size())) {
        fft_pow2(x, false);
        return x;
    }
    return dft_bluestein(x);
}

std::vector<double> magnitude_spectrum(const std::vector<double>& values, int pad_factor) {
    if (values.empty()) throw std::invalid_argument("magnitude_spectrum: empty input");
    if (pad_factor < 1) throw std::invalid_argument("magnitude_spectrum: pad_factor must be >= 1");

    const std::size_t n = values.size() * static_cast<std::size_t>(pad_factor);
    std::vector<std::complex<double>> x(n, {0.0, 0.0});
    for (std::size_t i = 0; i < values.size(); ++i) x[i] = {values[i], 0.0};
    x = dft(std::move(x));

    std::vector<double> mags(n / 2 + 1);
    for (std::size_t k = 0; k < mags.size(); ++k) mags[k] = std::abs(x[k]);
    return mags;
}

}  // namespace pulseaug
