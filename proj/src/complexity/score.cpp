#include "sinoforge/complexity/score.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sinoforge/spectral/spectrum.hpp"

namespace sinoforge::complexity {

double shannon_entropy(const Image& patch, int bins) {
    if (bins < 2) throw std::invalid_argument("shannon_entropy: bins must be >= 2");
    if (patch.size() == 0) throw std::invalid_argument("shannon_entropy: empty patch");
    std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
    for (float v : patch.data()) {
        const double x = std::clamp(static_cast<double>(v), 0.0, 1.0);
        int b = static_cast<int>(x * bins);
        if (b >= bins) b = bins - 1;  // value 1.0 belongs to the top bin
        ++counts[static_cast<std::size_t>(b)];
    }
    const double total = static_cast<double>(patch.size());
    double h = 0.0;
    for (std::size_t cnt : counts) {
        if (cnt == 0) continue;
        const double p = static_cast<double>(cnt) / total;
        h -= p * std::log(p);
    }
    return h;
}

double spectral_l1(const Image& patch) {
    const auto ps = spectral::fft2_power(patch);
    double sum = 0.0;
    for (double p : ps.power) sum += std::sqrt(p);
    return sum;
}

ComplexityScore kappa(const Image& patch, int bins) {
    ComplexityScore score;
    score.entropy = shannon_entropy(patch, bins);
    score.spectral_l1 = spectral_l1(patch);
    score.kappa = score.entropy + std::log1p(score.spectral_l1);
    return score;
}

StepAllocation allocate_steps(const std::vector<double>& kappas, int s_min, int s_max,
                              bool normalize) {
    if (kappas.empty()) throw std::invalid_argument("allocate_steps: empty score list");
    if (s_min < 1 || s_min > s_max) {
        throw std::invalid_argument("allocate_steps: need 1 <= s_min <= s_max");
    }
    StepAllocation alloc;
    alloc.s_min = s_min;
    alloc.s_max = s_max;
    alloc.mu = std::accumulate(kappas.begin(), kappas.end(), 0.0) /
               static_cast<double>(kappas.size());
    double scale = 1.0;
    if (normalize) {
        double var = 0.0;
        for (double k : kappas) var += (k - alloc.mu) * (k - alloc.mu);
        var /= static_cast<double>(kappas.size());
        const double sd = std::sqrt(var);
        if (sd > 1e-12) scale = sd;
    }
    alloc.per_patch_steps.reserve(kappas.size());
    for (double k : kappas) {
        const double s = 1.0 / (1.0 + std::exp(-(k - alloc.mu) / scale));
        const int steps = static_cast<int>(std::floor(s_min + (s_max - s_min) * s));
        alloc.per_patch_steps.push_back(std::clamp(steps, s_min, s_max));
    }
    return alloc;
}

} // namespace sinoforge::complexity
