#pragma once

// Brute-force reference implementations used to cross-check library results.
// Everything here is written independently of the library internals: direct
// O(n^4) DFT sums, explicit convolution loops, and naive histograms, so a
// shared bug cannot hide on both sides of a comparison.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "sinoforge/core/image.hpp"
#include "sinoforge/core/rng.hpp"

namespace oracles {

using sinoforge::Image;

/// Unnormalized 2-D DFT by the direct double sum, DC at (0,0).
inline std::vector<std::complex<double>> dft2_brute(const Image& img) {
    const int h = img.height();
    const int w = img.width();
    std::vector<std::complex<double>> out(static_cast<std::size_t>(h) * w);
    for (int u = 0; u < h; ++u) {
        for (int v = 0; v < w; ++v) {
            std::complex<double> acc{0.0, 0.0};
            for (int r = 0; r < h; ++r) {
                for (int c = 0; c < w; ++c) {
                    const double phase = -2.0 * std::numbers::pi *
                                         (static_cast<double>(u) * r / h +
                                          static_cast<double>(v) * c / w);
                    acc += static_cast<double>(img.at(r, c)) *
                           std::complex<double>{std::cos(phase), std::sin(phase)};
                }
            }
            out[static_cast<std::size_t>(u) * w + v] = acc;
        }
    }
    return out;
}

inline std::vector<double> power_brute(const Image& img) {
    const auto grid = dft2_brute(img);
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = std::norm(grid[i]);
    return out;
}

inline double spectral_l1_brute(const Image& img) {
    double sum = 0.0;
    for (const auto& f : dft2_brute(img)) sum += std::abs(f);
    return sum;
}

/// High-band energy fraction with the Chebyshev band max(f_u, f_v) > band,
/// folded frequencies f = min(idx, n-idx) / (n/2).
inline double gamma_brute(const Image& img, double band) {
    const auto power = power_brute(img);
    const int h = img.height();
    const int w = img.width();
    double total = 0.0;
    double high = 0.0;
    for (int u = 0; u < h; ++u) {
        const double fu = static_cast<double>(std::min(u, h - u)) / (h / 2.0);
        for (int v = 0; v < w; ++v) {
            const double fv = static_cast<double>(std::min(v, w - v)) / (w / 2.0);
            const double p = power[static_cast<std::size_t>(u) * w + v];
            total += p;
            if (std::max(fu, fv) > band) high += p;
        }
    }
    return total > 0.0 ? high / total : 0.0;
}

inline double adjusted_brute(double gamma, double mask_ratio, double tau) {
    return (1.0 - mask_ratio) * gamma + tau * mask_ratio;
}

inline double entropy_brute(const Image& img, int bins) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
    for (float v : img.data()) {
        const double x = std::min(std::max(static_cast<double>(v), 0.0), 1.0);
        const int b = std::min(static_cast<int>(x * bins), bins - 1);
        ++counts[static_cast<std::size_t>(b)];
    }
    double h = 0.0;
    for (std::size_t cnt : counts) {
        if (cnt == 0) continue;
        const double p = static_cast<double>(cnt) / static_cast<double>(img.size());
        h -= p * std::log(p);
    }
    return h;
}

inline double kappa_brute(const Image& img, int bins) {
    return entropy_brute(img, bins) + std::log(1.0 + spectral_l1_brute(img));
}

/// Sigmoid step mapping steps_i = floor(s_min + (s_max-s_min)*sigma(k_i-mu)).
inline std::vector<int> allocate_brute(const std::vector<double>& kappas, int s_min, int s_max) {
    double mu = 0.0;
    for (double k : kappas) mu += k;
    mu /= static_cast<double>(kappas.size());
    std::vector<int> out;
    out.reserve(kappas.size());
    for (double k : kappas) {
        const double s = 1.0 / (1.0 + std::exp(-(k - mu)));
        out.push_back(static_cast<int>(std::floor(s_min + (s_max - s_min) * s)));
    }
    return out;
}

/// Direct 3x3 Sobel convolution with edge-replicate indexing.
inline Image sobel_brute(const Image& img) {
    static const int kx[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
    static const int ky[3][3] = {{-1, -2, -1}, {0, 0, 0}, {1, 2, 1}};
    const int h = img.height();
    const int w = img.width();
    Image out(h, w);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            double gx = 0.0;
            double gy = 0.0;
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    const int rr = std::clamp(r + i - 1, 0, h - 1);
                    const int cc = std::clamp(c + j - 1, 0, w - 1);
                    gx += kx[i][j] * static_cast<double>(img.at(rr, cc));
                    gy += ky[i][j] * static_cast<double>(img.at(rr, cc));
                }
            }
            out.at(r, c) = static_cast<float>(std::sqrt(gx * gx + gy * gy));
        }
    }
    return out;
}

inline Image random_image(int height, int width, std::uint64_t seed) {
    sinoforge::Rng rng(seed);
    Image img(height, width);
    for (float& v : img.data()) v = static_cast<float>(rng.uniform01());
    return img;
}

inline double max_abs_diff(const Image& a, const Image& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        m = std::max(m, std::abs(static_cast<double>(a.data()[i]) - b.data()[i]));
    }
    return m;
}

inline bool bit_equal(const Image& a, const Image& b) {
    return a.height() == b.height() && a.width() == b.width() && a.data() == b.data();
}

inline double rel_diff(double got, double want) {
    const double denom = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / denom;
}

} // namespace oracles
