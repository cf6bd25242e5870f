#include "sinoforge/grid/resample.hpp"

#include <algorithm>
#include <stdexcept>

namespace sinoforge::grid {

namespace {

int reflect_index(int i, int n) {
    if (i < n) return i;
    const int r = 2 * (n - 1) - i;
    return std::clamp(r, 0, n - 1);
}

void check_factor(int factor) {
    if (factor < 1) throw std::invalid_argument("resample: factor must be >= 1");
}

} // namespace

Image downsample(const Image& img, int factor) {
    check_factor(factor);
    const int oh = (img.height() + factor - 1) / factor;
    const int ow = (img.width() + factor - 1) / factor;
    Image out(oh, ow);
    const double inv = 1.0 / (static_cast<double>(factor) * factor);
    for (int r = 0; r < oh; ++r) {
        for (int c = 0; c < ow; ++c) {
            double acc = 0.0;
            for (int dr = 0; dr < factor; ++dr) {
                const int sr = reflect_index(r * factor + dr, img.height());
                for (int dc = 0; dc < factor; ++dc) {
                    const int sc = reflect_index(c * factor + dc, img.width());
                    acc += img.at(sr, sc);
                }
            }
            out.at(r, c) = static_cast<float>(acc * inv);
        }
    }
    return out;
}

Image upsample_nearest(const Image& img, int factor) {
    check_factor(factor);
    Image out(img.height() * factor, img.width() * factor);
    for (int r = 0; r < out.height(); ++r) {
        const int sr = r / factor;
        for (int c = 0; c < out.width(); ++c) {
            out.at(r, c) = img.at(sr, c / factor);
        }
    }
    return out;
}

Mask downsample_mask(const Mask& mask, int factor) {
    check_factor(factor);
    const int oh = (mask.height() + factor - 1) / factor;
    const int ow = (mask.width() + factor - 1) / factor;
    Mask out(oh, ow, 0);
    for (int r = 0; r < oh; ++r) {
        for (int c = 0; c < ow; ++c) {
            std::uint8_t all = 1;
            for (int dr = 0; dr < factor && all; ++dr) {
                const int sr = reflect_index(r * factor + dr, mask.height());
                for (int dc = 0; dc < factor; ++dc) {
                    const int sc = reflect_index(c * factor + dc, mask.width());
                    if (!mask.at(sr, sc)) {
                        all = 0;
                        break;
                    }
                }
            }
            out.at(r, c) = all;
        }
    }
    return out;
}

Mask upsample_mask_nearest(const Mask& mask, int factor) {
    check_factor(factor);
    Mask out(mask.height() * factor, mask.width() * factor, 0);
    for (int r = 0; r < out.height(); ++r) {
        const int sr = r / factor;
        for (int c = 0; c < out.width(); ++c) {
            out.at(r, c) = mask.at(sr, c / factor);
        }
    }
    return out;
}

} // namespace sinoforge::grid
