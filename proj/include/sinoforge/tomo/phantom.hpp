#pragma once

#include <string>
#include <vector>

#include "sinoforge/core/image.hpp"

namespace sinoforge::tomo {

/// One additive ellipse in normalized coordinates: the square image spans
/// [-1,1] x [-1,1], x grows with column index, y grows with row index.
struct Ellipse {
    double cx = 0.0;
    double cy = 0.0;
    double a = 0.5;  // semi-axis along x before rotation
    double b = 0.5;  // semi-axis along y before rotation
    double angle_deg = 0.0;
    double value = 1.0;
};

/// Synthetic object: a list of additive ellipses rasterized onto a square
/// grid. Stands in for real CT slices when generating sinograms.
struct Phantom {
    int size = 128;
    std::vector<Ellipse> ellipses;

    /// Head-like default: skull ring, interior, and a few internal features
    /// with sub-0.1 contrast steps so reconstructions have graded structure.
    static Phantom standard_head(int size);

    /// Parse {"size": N, "ellipses": [{"cx":..,"cy":..,"a":..,"b":..,
    /// "angle_deg":..,"value":..}, ...]}. Missing per-ellipse keys take the
    /// field defaults; unknown keys are rejected.
    static Phantom from_json_text(const std::string& text);
    static Phantom from_json_file(const std::string& path);
};

/// Sample ellipse intensities on the pixel grid with 8x8 supersampling per
/// pixel, then clamp the accumulated sum to [0,1].
Image rasterize(const Phantom& ph);

} // namespace sinoforge::tomo
