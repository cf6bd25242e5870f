#pragma once

#include <vector>

#include "sinoforge/core/image.hpp"

namespace sinoforge::patching {

/// Tiling of an image into fixed-size square patches: anchors run 0, stride,
/// 2*stride, ... per axis with the final anchor clamped to dim - patch so the
/// last patch ends exactly at the border (duplicates removed).
struct PatchGrid {
    int patch = 128;
    int stride = 96;
    std::vector<int> row_anchors;
    std::vector<int> col_anchors;

    int overlap() const { return patch - stride; }
    std::size_t count() const { return row_anchors.size() * col_anchors.size(); }

    Rect rect_at(std::size_t index) const {
        const std::size_t cols = col_anchors.size();
        return Rect{row_anchors[index / cols], col_anchors[index % cols], patch, patch};
    }
};

PatchGrid build_grid(int height, int width, int patch, int stride);

} // namespace sinoforge::patching
