#pragma once

#include "sinoforge/core/image.hpp"

namespace sinoforge::grid {

/// Area-pooling downsample by an integer factor: each output pixel is the
/// mean of its factor x factor source block. Dimensions that are not
/// divisible by the factor are reflect-padded (without repeating the edge
/// sample) on the bottom/right before pooling, so the output has
/// ceil(dim / factor) pixels per axis.
Image downsample(const Image& img, int factor);

/// Nearest-neighbour upsample: every source pixel becomes a factor x factor
/// block.
Image upsample_nearest(const Image& img, int factor);

/// Conservative mask downsample: a coarse pixel is known only when every
/// pixel of its source block is known. Blocks are formed as in downsample,
/// including reflect padding.
Mask downsample_mask(const Mask& mask, int factor);

Mask upsample_mask_nearest(const Mask& mask, int factor);

} // namespace sinoforge::grid
