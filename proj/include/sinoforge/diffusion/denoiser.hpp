#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>

#include "sinoforge/core/image.hpp"

namespace sinoforge::diffusion {

/// Where the frame handed to a denoiser sits in the run: the pyramid scale
/// (1 = full resolution, 2 = half, 4 = quarter) and the top-left anchor of
/// the frame at that scale. Analytic denoisers that know the ground truth
/// need this to produce the matching stage/patch target; learned-denoiser
/// stand-ins ignore it.
struct FrameContext {
    int scale = 1;
    int row0 = 0;
    int col0 = 0;
};

/// Noise predictor evaluated by the sampler: given x_t and its noise level
/// alpha_bar_t, return the predicted noise of identical shape. Must be
/// deterministic and safe for concurrent read-only use.
class Denoiser {
public:
    virtual ~Denoiser() = default;
    virtual Image predict_noise(const Image& x_t, double alpha_bar_t,
                                const FrameContext& ctx) const = 0;
    Image predict_noise(const Image& x_t, double alpha_bar_t) const {
        return predict_noise(x_t, alpha_bar_t, FrameContext{});
    }
};

/// Exact-recovery denoiser: eps = (x_t - sqrt(a)*x*) / sqrt(1-a) where x* is
/// the clean target cropped to the requested frame. At alpha_bar = 1 the
/// formula is singular and the prediction is zero noise (x_t is clean).
class OracleDenoiser : public Denoiser {
public:
    explicit OracleDenoiser(Image target);

    Image predict_noise(const Image& x_t, double alpha_bar_t,
                        const FrameContext& ctx) const override;

    const Image& target() const { return target_; }

private:
    const Image& target_at_scale(int scale) const;

    Image target_;
    mutable std::map<int, Image> scaled_;  // lazily downsampled targets
};

/// Smoothness-prior denoiser: the implied clean prediction is a Gaussian
/// blur of clamp(x_t), converted to a noise estimate via the usual
/// eps = (x_t - sqrt(a)*x0) / sqrt(1-a). Frame context is ignored.
class BlurDenoiser : public Denoiser {
public:
    explicit BlurDenoiser(int radius = 2);

    Image predict_noise(const Image& x_t, double alpha_bar_t,
                        const FrameContext& ctx) const override;

private:
    int radius_;
};

/// Pass-through wrapper that counts predict_noise invocations.
class CountingDenoiser : public Denoiser {
public:
    explicit CountingDenoiser(const Denoiser& inner) : inner_(inner) {}

    Image predict_noise(const Image& x_t, double alpha_bar_t,
                        const FrameContext& ctx) const override {
        ++count_;
        return inner_.predict_noise(x_t, alpha_bar_t, ctx);
    }

    std::uint64_t count() const { return count_.load(); }
    void reset() { count_.store(0); }

private:
    const Denoiser& inner_;
    mutable std::atomic<std::uint64_t> count_{0};
};

/// Separable Gaussian blur with sigma = radius/2 and taps in [-radius,
/// radius], edge-replicate boundaries. radius 0 is the identity.
Image gaussian_blur(const Image& img, int radius);

} // namespace sinoforge::diffusion
