#include "sinoforge/spectral/spectrum.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "sinoforge/core/fft.hpp"

namespace sinoforge::spectral {

namespace {

/// Row-column 2-D DFT in doubles; returns the full complex grid.
std::vector<std::complex<double>> fft2(const Image& patch) {
    const int h = patch.height();
    const int w = patch.width();
    std::vector<std::complex<double>> grid(static_cast<std::size_t>(h) * w);
    for (int r = 0; r < h; ++r) {
        std::vector<std::complex<double>> row(static_cast<std::size_t>(w));
        for (int c = 0; c < w; ++c) row[static_cast<std::size_t>(c)] = {patch.at(r, c), 0.0};
        fft_inplace(row, false);
        for (int c = 0; c < w; ++c) grid[static_cast<std::size_t>(r) * w + c] = row[static_cast<std::size_t>(c)];
    }
    std::vector<std::complex<double>> col(static_cast<std::size_t>(h));
    for (int c = 0; c < w; ++c) {
        for (int r = 0; r < h; ++r) col[static_cast<std::size_t>(r)] = grid[static_cast<std::size_t>(r) * w + c];
        fft_inplace(col, false);
        for (int r = 0; r < h; ++r) grid[static_cast<std::size_t>(r) * w + c] = col[static_cast<std::size_t>(r)];
    }
    return grid;
}

/// Folded normalized frequency of bin idx on an n-point axis, in [0,1].
double folded_freq(int idx, int n) {
    const int k = std::min(idx, n - idx);
    return static_cast<double>(k) / (n / 2.0);
}

} // namespace

double PowerSpectrum::total() const {
    return std::accumulate(power.begin(), power.end(), 0.0);
}

PowerSpectrum fft2_power(const Image& patch) {
    if (patch.height() < 2 || patch.width() < 2) {
        throw std::invalid_argument("fft2_power: patch must be at least 2x2");
    }
    const auto grid = fft2(patch);
    PowerSpectrum ps;
    ps.height = patch.height();
    ps.width = patch.width();
    ps.power.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) ps.power[i] = std::norm(grid[i]);
    return ps;
}

double high_freq_ratio(const PowerSpectrum& spectrum, double band_fraction) {
    double total = 0.0;
    double high = 0.0;
    for (int u = 0; u < spectrum.height; ++u) {
        const double fu = folded_freq(u, spectrum.height);
        for (int v = 0; v < spectrum.width; ++v) {
            const double fv = folded_freq(v, spectrum.width);
            const double p = spectrum.at(u, v);
            total += p;
            if (std::max(fu, fv) > band_fraction) high += p;
        }
    }
    // Treat numerically-black patches as spectrally empty: diffusion output
    // over a black region carries ~1e-8 roundoff dust whose energy ratio is
    // arbitrary. RMS intensity <= 1e-6 (on [0,1] data) reads as all-zero.
    const double n_pix = static_cast<double>(spectrum.height) * spectrum.width;
    if (total <= 1e-12 * n_pix * n_pix) return 0.0;
    return high / total;
}

double adjusted_score(double gamma, double mask_ratio, double tau) {
    return (1.0 - mask_ratio) * gamma + tau * mask_ratio;
}

SpectralScore should_skip(const Image& patch, const Mask& mask_patch, double tau,
                          double band_fraction) {
    if (!mask_patch.same_shape(patch)) {
        throw std::invalid_argument("should_skip: patch and mask shapes differ");
    }
    SpectralScore score;
    score.gamma = high_freq_ratio(fft2_power(patch), band_fraction);
    score.mask_ratio = mask_patch.zero_fraction();
    score.adjusted = adjusted_score(score.gamma, score.mask_ratio, tau);
    score.skip = score.adjusted < tau;
    return score;
}

} // namespace sinoforge::spectral
