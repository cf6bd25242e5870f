#pragma once

#include "sinoforge/core/image.hpp"

namespace sinoforge::grid {

/// Sobel gradient magnitude sqrt(gx^2 + gy^2) with the standard 3x3 kernels
/// and edge-replicate boundary handling.
Image sobel_magnitude(const Image& img);

/// Mean of grad over rect; rect must lie inside grad.
double mean_region_gradient(const Image& grad, const Rect& rect);

} // namespace sinoforge::grid
