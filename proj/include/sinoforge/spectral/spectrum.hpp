#pragma once

#include <vector>

#include "sinoforge/core/image.hpp"

namespace sinoforge::spectral {

/// Squared magnitudes of the unnormalized 2-D DFT, DC at (0,0).
struct PowerSpectrum {
    int height = 0;
    int width = 0;
    std::vector<double> power;  // row-major, height*width

    double at(int u, int v) const {
        return power[static_cast<std::size_t>(u) * width + v];
    }
    double total() const;
};

/// Skip decision record for one patch.
struct SpectralScore {
    double gamma = 0.0;       // high-frequency energy ratio
    double mask_ratio = 0.0;  // fraction of missing pixels
    double adjusted = 0.0;    // (1-r)*gamma + tau*r
    bool skip = false;        // adjusted < tau, strictly
};

PowerSpectrum fft2_power(const Image& patch);

/// Fraction of spectral energy in the Chebyshev high band: bins where
/// max(f_u, f_v) > band_fraction with folded normalized frequencies
/// f = min(idx, n-idx) / (n/2). An all-zero spectrum scores 0.
double high_freq_ratio(const PowerSpectrum& spectrum, double band_fraction = 2.0 / 3.0);

/// gamma' = (1 - mask_ratio)*gamma + tau*mask_ratio.
double adjusted_score(double gamma, double mask_ratio, double tau);

/// Score a patch (callers pass the fusion output so mask seams do not leak
/// spurious high frequencies) and decide skipping under the strict
/// adjusted < tau rule.
SpectralScore should_skip(const Image& patch, const Mask& mask_patch, double tau,
                          double band_fraction = 2.0 / 3.0);

} // namespace sinoforge::spectral
