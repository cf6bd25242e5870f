#pragma once

#include <vector>

#include "sinoforge/core/image.hpp"
#include "sinoforge/patching/grid.hpp"

namespace sinoforge::patching {

/// Seam policy: blending is enabled on a band only when the mean mid-derived
/// gradient over the band exceeds eta; band_width caps how many pixels of
/// each overlap are ramped (the rest is owned by the later patch).
struct BlendPolicy {
    double eta = 0.05;
    int band_width = 32;
};

enum class Axis { horizontal, vertical };

/// Cosine ramp (1 - cos(pi*p/L)) / 2 for 0 <= p <= L: exactly 0 at p=0 and
/// 1 at p=L.
double cosine_weight(double p, int band_width);

/// Convex seam combination over a band of width L along `axis`:
/// out = alpha(p)*incoming + (1-alpha(p))*existing with p the integer offset
/// across the band, so the existing region passes through unchanged at p=0.
/// Both inputs must already be the band-sized regions.
Image blend_pair(const Image& incoming, const Image& existing, Axis axis, int band_width);

/// Stitch per-anchor patches back into a full image. Horizontal pass first
/// (patches within a grid row), vertical pass second (row strips). For each
/// overlap the first band_width pixels form the seam band: blended with the
/// cosine ramp when mean_region_gradient(mid_grad, band) > eta, otherwise
/// hard-stitched; the later patch in raster order owns everything past the
/// band start either way. Identical overlapping content reassembles
/// bit-exactly on both paths.
Image assemble(const std::vector<Image>& patches, const PatchGrid& grid,
               const Image& mid_grad, const BlendPolicy& policy);

} // namespace sinoforge::patching
