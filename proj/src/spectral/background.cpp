#include "sinoforge/spectral/background.hpp"

#include "sinoforge/core/rng.hpp"

namespace sinoforge::spectral {

Image background_patch(const diffusion::Denoiser& den,
                       const diffusion::DiffusionSchedule& sched,
                       int patch_size, std::uint64_t seed) {
    Rng rng(derive_seed(seed, "background-input"));
    Image input = gaussian_image(patch_size, patch_size, rng, 0.0, 0.01);
    input.clamp01();
    const Mask nothing_known = Mask::zeros(patch_size, patch_size);
    return diffusion::ddim_infer(input, nothing_known, den, sched, sched.num_steps(),
                                 derive_seed(seed, "background-run"),
                                 diffusion::FrameContext{1, 0, 0});
}

const Image& BackgroundCache::get(const diffusion::Denoiser& den,
                                  const diffusion::DiffusionSchedule& sched,
                                  int patch_size, std::uint64_t seed) {
    const Key key{sched.T, sched.num_steps(), patch_size, seed};
    std::lock_guard<std::mutex> lock(mutex_);
    if (!key_ || !(*key_ == key)) {
        patch_ = background_patch(den, sched, patch_size, seed);
        key_ = key;
        ++builds_;
    }
    return patch_;
}

} // namespace sinoforge::spectral
