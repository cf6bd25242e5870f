#pragma once

#include <cstdint>

#include "sinoforge/core/image.hpp"

namespace sinoforge::tomo {

/// Remove round(ratio * angles) rows chosen uniformly without replacement by
/// the seeded generator; kept rows are all-1, removed rows all-0. ratio is
/// the fraction of projection angles removed (0.8 keeps 20%).
Mask random_angle_mask(int angles, int detectors, double ratio, std::uint64_t seed);

/// Keep rows whose index is a multiple of k = round(1 / (1 - ratio)), zero
/// the rest.
Mask periodic_angle_mask(int angles, int detectors, double ratio);

/// Round-half-up count of removed angles for a given ratio.
int removed_angle_count(int angles, double ratio);

} // namespace sinoforge::tomo
