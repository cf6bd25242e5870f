#include "sinoforge/patching/grid.hpp"

#include <stdexcept>

namespace sinoforge::patching {

namespace {

std::vector<int> axis_anchors(int dim, int patch, int stride) {
    std::vector<int> anchors;
    for (int a = 0;; a += stride) {
        if (a + patch >= dim) {
            const int last = dim - patch;
            if (anchors.empty() || anchors.back() != last) anchors.push_back(last);
            break;
        }
        anchors.push_back(a);
    }
    return anchors;
}

} // namespace

PatchGrid build_grid(int height, int width, int patch, int stride) {
    if (patch < 1 || patch > height || patch > width) {
        throw std::invalid_argument("build_grid: patch must fit inside the image");
    }
    if (stride < 1 || stride > patch) {
        throw std::invalid_argument("build_grid: need 1 <= stride <= patch");
    }
    PatchGrid grid;
    grid.patch = patch;
    grid.stride = stride;
    grid.row_anchors = axis_anchors(height, patch, stride);
    grid.col_anchors = axis_anchors(width, patch, stride);
    return grid;
}

} // namespace sinoforge::patching
