#pragma once

#include <string>

#include "sinoforge/core/image.hpp"

namespace sinoforge::grid {

/// Float grid container: magic "SGF1", uint32-le height, uint32-le width,
/// then height*width float32-le samples in row-major order.
void save_sgf(const Image& img, const std::string& path);
Image load_sgf(const std::string& path);

/// Mask container: magic "SGM1", uint32-le height, uint32-le width, then one
/// byte per pixel (0 = missing, 1 = known). Loading rejects other values.
void save_sgm(const Mask& mask, const std::string& path);
Mask load_sgm(const std::string& path);

/// Binary PGM (P5) preview, maxval 65535, big-endian samples. Values are
/// clamped to [0,1] and scaled as round(65535 * v).
void save_pgm16(const Image& img, const std::string& path);

} // namespace sinoforge::grid
