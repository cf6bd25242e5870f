#pragma once

#include <vector>

#include "sinoforge/core/image.hpp"

namespace sinoforge::complexity {

struct ComplexityScore {
    double entropy = 0.0;      // nats
    double spectral_l1 = 0.0;  // L1 norm of the DFT magnitude grid
    double kappa = 0.0;        // entropy + ln(1 + spectral_l1)
};

struct StepAllocation {
    std::vector<int> per_patch_steps;
    int s_min = 0;
    int s_max = 0;
    double mu = 0.0;  // mean kappa across all patches
};

/// Shannon entropy (nats) of the intensity histogram over [0,1] with
/// equal-width bins; values exactly 1.0 land in the top bin.
double shannon_entropy(const Image& patch, int bins);

/// Sum of unnormalized DFT magnitudes |F(u,v)| over all bins.
double spectral_l1(const Image& patch);

ComplexityScore kappa(const Image& patch, int bins);

/// steps_i = floor(s_min + (s_max - s_min) * sigmoid(kappa_i - mu)) with the
/// standard logistic sigmoid and mu the mean of the list. When `normalize`
/// is set the sigmoid argument is divided by the standard deviation of the
/// list (left unscaled if the deviation vanishes).
StepAllocation allocate_steps(const std::vector<double>& kappas, int s_min, int s_max,
                              bool normalize = false);

} // namespace sinoforge::complexity
