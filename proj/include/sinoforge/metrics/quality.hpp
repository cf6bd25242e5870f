#pragma once

#include "sinoforge/core/image.hpp"

namespace sinoforge::metrics {

struct QualityReport {
    double ssim = 0.0;
    double psnr = 0.0;
};

/// Single-scale SSIM: 11x11 Gaussian window (sigma 1.5, normalized to sum 1),
/// C1 = 0.01^2, C2 = 0.03^2 for dynamic range 1, valid-region windowing (no
/// padding), mean over window positions. Identical inputs give exactly 1.
double ssim(const Image& a, const Image& b);

/// 10*log10(1/MSE) for values in [0,1]; identical images return the 100 dB
/// cap instead of infinity.
double psnr(const Image& a, const Image& b);

QualityReport quality(const Image& a, const Image& b);

} // namespace sinoforge::metrics
