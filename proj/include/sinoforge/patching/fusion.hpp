#pragma once

#include "sinoforge/core/image.hpp"

namespace sinoforge::patching {

/// Mid-resolution prior fusion: per-pixel (up_low + x_mid) / 2.
Image fuse_mid(const Image& x_mid, const Image& up_low);

/// Patch prior fusion: per-pixel (mid_region_up + x_patch) / 2, where
/// mid_region_up is the x2-upsampled mid-resolution region aligned with the
/// patch.
Image fuse_patch(const Image& x_patch, const Image& mid_region_up);

} // namespace sinoforge::patching
