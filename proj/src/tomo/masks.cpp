#include "sinoforge/tomo/masks.hpp"

#include <cmath>
#include <stdexcept>

#include "sinoforge/core/rng.hpp"

namespace sinoforge::tomo {

namespace {

void check_ratio(double ratio) {
    if (!(ratio >= 0.0) || ratio >= 1.0) {
        throw std::invalid_argument("angle mask: ratio must be in [0, 1)");
    }
}

} // namespace

int removed_angle_count(int angles, double ratio) {
    check_ratio(ratio);
    return static_cast<int>(std::floor(ratio * angles + 0.5));
}

Mask random_angle_mask(int angles, int detectors, double ratio, std::uint64_t seed) {
    check_ratio(ratio);
    if (angles < 1 || detectors < 1) {
        throw std::invalid_argument("angle mask: dimensions must be positive");
    }
    const int removed = removed_angle_count(angles, ratio);
    Mask mask(angles, detectors, 1);
    Rng rng(derive_seed(seed, "angle-mask"));
    for (int row : rng.sample_without_replacement(angles, removed)) {
        for (int c = 0; c < detectors; ++c) mask.at(row, c) = 0;
    }
    return mask;
}

Mask periodic_angle_mask(int angles, int detectors, double ratio) {
    check_ratio(ratio);
    if (angles < 1 || detectors < 1) {
        throw std::invalid_argument("angle mask: dimensions must be positive");
    }
    const int k = static_cast<int>(std::floor(1.0 / (1.0 - ratio) + 0.5));
    Mask mask(angles, detectors, 0);
    for (int r = 0; r < angles; r += k) {
        for (int c = 0; c < detectors; ++c) mask.at(r, c) = 1;
    }
    return mask;
}

} // namespace sinoforge::tomo
