#include "sinoforge/grid/sobel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sinoforge::grid {

Image sobel_magnitude(const Image& img) {
    const int h = img.height();
    const int w = img.width();
    Image out(h, w);
    auto px = [&](int r, int c) -> double {
        return img.at(std::clamp(r, 0, h - 1), std::clamp(c, 0, w - 1));
    };
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const double tl = px(r - 1, c - 1), tc = px(r - 1, c), tr = px(r - 1, c + 1);
            const double ml = px(r, c - 1), mr = px(r, c + 1);
            const double bl = px(r + 1, c - 1), bc = px(r + 1, c), br = px(r + 1, c + 1);
            const double gx = (tr + 2.0 * mr + br) - (tl + 2.0 * ml + bl);
            const double gy = (bl + 2.0 * bc + br) - (tl + 2.0 * tc + tr);
            out.at(r, c) = static_cast<float>(std::sqrt(gx * gx + gy * gy));
        }
    }
    return out;
}

double mean_region_gradient(const Image& grad, const Rect& rect) {
    check_rect(rect, grad.height(), grad.width(), "mean_region_gradient");
    if (rect.empty()) return 0.0;
    double acc = 0.0;
    for (int r = 0; r < rect.height; ++r) {
        for (int c = 0; c < rect.width; ++c) {
            acc += grad.at(rect.row + r, rect.col + c);
        }
    }
    return acc / (static_cast<double>(rect.height) * rect.width);
}

} // namespace sinoforge::grid
