#include "sinoforge/patching/blend.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sinoforge/grid/sobel.hpp"

namespace sinoforge::patching {

double cosine_weight(double p, int band_width) {
    if (band_width < 1) throw std::invalid_argument("cosine_weight: band width must be >= 1");
    if (p < 0.0 || p > static_cast<double>(band_width)) {
        throw std::invalid_argument("cosine_weight: offset outside the band");
    }
    return 0.5 * (1.0 - std::cos(std::numbers::pi * p / band_width));
}

Image blend_pair(const Image& incoming, const Image& existing, Axis axis, int band_width) {
    if (!incoming.same_shape(existing)) throw std::invalid_argument("blend_pair: shape mismatch");
    const int extent = (axis == Axis::horizontal) ? incoming.width() : incoming.height();
    if (band_width < 1 || band_width > extent) {
        throw std::invalid_argument("blend_pair: band exceeds region extent");
    }
    Image out = incoming;
    for (int r = 0; r < incoming.height(); ++r) {
        for (int c = 0; c < incoming.width(); ++c) {
            const int p = (axis == Axis::horizontal) ? c : r;
            if (p >= band_width) continue;  // past the band the incoming patch owns the pixel
            const float alpha = static_cast<float>(cosine_weight(p, band_width));
            const float old = existing.at(r, c);
            // Written as old + alpha*(new - old) so equal inputs pass through
            // bit-exactly.
            out.at(r, c) = old + alpha * (incoming.at(r, c) - old);
        }
    }
    return out;
}

namespace {

/// Seam of one incoming region against what is already written: overwrite
/// with the incoming values, then re-ramp the first `L` pixels of the overlap
/// when the gate fires.
void place_region(Image& canvas, const Image& incoming, int row, int col, int prev_end,
                  Axis axis, const Image& mid_grad, const BlendPolicy& policy) {
    const int start = (axis == Axis::horizontal) ? col : row;
    const int overlap = prev_end - start;
    const int band = std::min(policy.band_width, overlap);
    Image old_band;
    Rect band_rect;
    if (band > 0) {
        band_rect = (axis == Axis::horizontal)
                        ? Rect{row, col, incoming.height(), band}
                        : Rect{row, col, band, incoming.width()};
        old_band = canvas.crop(band_rect);
    }
    canvas.paste(incoming, row, col);
    if (band <= 0) return;

    const double gate = grid::mean_region_gradient(mid_grad, band_rect);
    if (!(gate > policy.eta)) return;  // hard stitch: later region keeps the band

    const Rect local = (axis == Axis::horizontal)
                           ? Rect{0, 0, incoming.height(), band}
                           : Rect{0, 0, band, incoming.width()};
    const Image blended = blend_pair(incoming.crop(local), old_band, axis, band);
    canvas.paste(blended, band_rect.row, band_rect.col);
}

} // namespace

Image assemble(const std::vector<Image>& patches, const PatchGrid& grid,
               const Image& mid_grad, const BlendPolicy& policy) {
    if (patches.size() != grid.count()) {
        throw std::invalid_argument("assemble: one patch required per grid anchor");
    }
    if (grid.row_anchors.empty() || grid.col_anchors.empty()) {
        throw std::invalid_argument("assemble: empty grid");
    }
    const int patch = grid.patch;
    const int height = grid.row_anchors.back() + patch;
    const int width = grid.col_anchors.back() + patch;
    if (mid_grad.height() != height || mid_grad.width() != width) {
        throw std::invalid_argument("assemble: gradient map must match output dimensions");
    }
    if (policy.band_width < 1) throw std::invalid_argument("assemble: band width must be >= 1");
    const std::size_t cols = grid.col_anchors.size();

    // Horizontal pass: fuse each grid row into a full-width strip. The strip
    // lives at its anchor row, so gate rectangles use full-image coordinates.
    std::vector<Image> strips;
    strips.reserve(grid.row_anchors.size());
    for (std::size_t ri = 0; ri < grid.row_anchors.size(); ++ri) {
        const int row = grid.row_anchors[ri];
        Image strip(patch, width);
        // The strip canvas is patch rows tall; gate rectangles index this
        // row-translated gradient crop so they line up with image space.
        const Image grad_rows = mid_grad.crop(Rect{row, 0, patch, width});
        int prev_end = 0;
        for (std::size_t ci = 0; ci < cols; ++ci) {
            const Image& p = patches[ri * cols + ci];
            if (p.height() != patch || p.width() != patch) {
                throw std::invalid_argument("assemble: patch dimensions do not match the grid");
            }
            const int col = grid.col_anchors[ci];
            if (ci == 0) {
                strip.paste(p, 0, col);
            } else {
                place_region(strip, p, 0, col, prev_end, Axis::horizontal, grad_rows, policy);
            }
            prev_end = col + patch;
        }
        strips.push_back(std::move(strip));
    }

    // Vertical pass: fuse the strips top to bottom.
    Image out(height, width);
    int prev_end = 0;
    for (std::size_t ri = 0; ri < grid.row_anchors.size(); ++ri) {
        const int row = grid.row_anchors[ri];
        if (ri == 0) {
            out.paste(strips[ri], 0, 0);
        } else {
            place_region(out, strips[ri], row, 0, prev_end, Axis::vertical, mid_grad, policy);
        }
        prev_end = row + patch;
    }
    return out;
}

} // namespace sinoforge::patching
