#include "sinoforge/diffusion/denoiser.hpp"

#include <cmath>
#include <stdexcept>

#include "sinoforge/grid/resample.hpp"

namespace sinoforge::diffusion {

OracleDenoiser::OracleDenoiser(Image target) : target_(std::move(target)) {
    // Precompute the pyramid targets so concurrent predict_noise calls never
    // mutate shared state.
    scaled_[1] = target_;
    scaled_[2] = grid::downsample(target_, 2);
    scaled_[4] = grid::downsample(target_, 4);
}

const Image& OracleDenoiser::target_at_scale(int scale) const {
    auto it = scaled_.find(scale);
    if (it == scaled_.end()) {
        throw std::invalid_argument("OracleDenoiser: unsupported frame scale");
    }
    return it->second;
}

Image OracleDenoiser::predict_noise(const Image& x_t, double alpha_bar_t,
                                    const FrameContext& ctx) const {
    const Image& full = target_at_scale(ctx.scale);
    Rect rect{ctx.row0, ctx.col0, x_t.height(), x_t.width()};
    const Image tgt = full.crop(rect);
    Image eps(x_t.height(), x_t.width());
    const double one_minus = 1.0 - alpha_bar_t;
    if (one_minus <= 0.0) return eps;  // clean level: no noise component
    const double sa = std::sqrt(alpha_bar_t);
    const double inv = 1.0 / std::sqrt(one_minus);
    for (std::size_t i = 0; i < eps.data().size(); ++i) {
        eps.data()[i] = static_cast<float>(
            (static_cast<double>(x_t.data()[i]) - sa * tgt.data()[i]) * inv);
    }
    return eps;
}

BlurDenoiser::BlurDenoiser(int radius) : radius_(radius) {
    if (radius < 0) throw std::invalid_argument("BlurDenoiser: radius must be >= 0");
}

Image BlurDenoiser::predict_noise(const Image& x_t, double alpha_bar_t,
                                  const FrameContext&) const {
    Image eps(x_t.height(), x_t.width());
    const double one_minus = 1.0 - alpha_bar_t;
    if (one_minus <= 0.0) return eps;
    Image x0 = x_t;
    x0.clamp01();
    x0 = gaussian_blur(x0, radius_);
    const double sa = std::sqrt(alpha_bar_t);
    const double inv = 1.0 / std::sqrt(one_minus);
    for (std::size_t i = 0; i < eps.data().size(); ++i) {
        eps.data()[i] = static_cast<float>(
            (static_cast<double>(x_t.data()[i]) - sa * x0.data()[i]) * inv);
    }
    return eps;
}

Image gaussian_blur(const Image& img, int radius) {
    if (radius <= 0) return img;
    const double sigma = radius / 2.0;
    std::vector<double> taps(static_cast<std::size_t>(2 * radius) + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double v = std::exp(-(i * i) / (2.0 * sigma * sigma));
        taps[static_cast<std::size_t>(i + radius)] = v;
        sum += v;
    }
    for (double& v : taps) v /= sum;

    const int h = img.height();
    const int w = img.width();
    Image tmp(h, w);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i) {
                const int cc = std::clamp(c + i, 0, w - 1);
                acc += taps[static_cast<std::size_t>(i + radius)] * img.at(r, cc);
            }
            tmp.at(r, c) = static_cast<float>(acc);
        }
    }
    Image out(h, w);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i) {
                const int rr = std::clamp(r + i, 0, h - 1);
                acc += taps[static_cast<std::size_t>(i + radius)] * tmp.at(rr, c);
            }
            out.at(r, c) = static_cast<float>(acc);
        }
    }
    return out;
}

} // namespace sinoforge::diffusion
