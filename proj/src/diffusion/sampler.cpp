#include "sinoforge/diffusion/sampler.hpp"

#include <cmath>
#include <stdexcept>

#include "sinoforge/core/rng.hpp"

namespace sinoforge::diffusion {

Image ddim_step(const Image& x_t, const Image& eps, double a_t, double a_prev) {
    if (!(a_t > 0.0) || a_t > 1.0 || !(a_prev > 0.0) || a_prev > 1.0) {
        throw std::invalid_argument("ddim_step: noise levels must be in (0, 1]");
    }
    if (!x_t.same_shape(eps)) throw std::invalid_argument("ddim_step: shape mismatch");
    const double sa_t = std::sqrt(a_t);
    const double sq_t = std::sqrt(1.0 - a_t);
    const double sa_p = std::sqrt(a_prev);
    const double sq_p = std::sqrt(1.0 - a_prev);
    Image out(x_t.height(), x_t.width());
    for (std::size_t i = 0; i < out.data().size(); ++i) {
        const double e = eps.data()[i];
        const double x0 = (static_cast<double>(x_t.data()[i]) - sq_t * e) / sa_t;
        out.data()[i] = static_cast<float>(sa_p * x0 + sq_p * e);
    }
    return out;
}

Image condition_on_known(const Image& x, const Image& known, const Mask& mask,
                         double a_prev, const Image& noise) {
    if (!x.same_shape(known) || !x.same_shape(noise) || !mask.same_shape(x)) {
        throw std::invalid_argument("condition_on_known: shape mismatch");
    }
    const double sa = std::sqrt(a_prev);
    const double sq = std::sqrt(1.0 - a_prev);
    Image out(x.height(), x.width());
    for (std::size_t i = 0; i < out.data().size(); ++i) {
        if (mask.bits()[i]) {
            out.data()[i] = static_cast<float>(
                sa * known.data()[i] + sq * noise.data()[i]);
        } else {
            out.data()[i] = x.data()[i];
        }
    }
    return out;
}

namespace {

/// Timesteps visited by a reduced run: the schedule suffix for late entry, or
/// `steps` evenly spaced picks (first and last retained) when thinned.
std::vector<int> select_timesteps(const DiffusionSchedule& sched, int steps, StepMode mode) {
    const int N = sched.num_steps();
    if (steps < 1 || steps > N) throw std::invalid_argument("ddim_infer: steps out of range");
    if (mode == StepMode::late_entry || steps == N) {
        return {sched.ddim_steps.end() - steps, sched.ddim_steps.end()};
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        out.push_back(sched.ddim_steps.back());
        return out;
    }
    for (int j = 0; j < steps; ++j) {
        const auto idx = static_cast<std::size_t>(
            std::lround(static_cast<double>(j) * (N - 1) / (steps - 1)));
        out.push_back(sched.ddim_steps[idx]);
    }
    return out;
}

} // namespace

Image ddim_infer(const Image& known, const Mask& mask, const Denoiser& den,
                 const DiffusionSchedule& sched, int steps, std::uint64_t seed,
                 const FrameContext& ctx, StepMode mode) {
    if (!mask.same_shape(known)) throw std::invalid_argument("ddim_infer: shape mismatch");
    const int N = sched.num_steps();
    const std::vector<int> ts = select_timesteps(sched, steps, mode);
    auto abar = [&](int t) { return sched.alpha_bar[static_cast<std::size_t>(t)]; };

    Image x(known.height(), known.width());
    {
        Rng init(derive_seed(seed, "ddim-init"));
        Image noise = gaussian_image(known.height(), known.width(), init);
        if (mode == StepMode::late_entry && steps < N) {
            // Enter mid-trajectory from the forward-diffused structured input.
            const double a_e = abar(ts.front());
            const double sa = std::sqrt(a_e);
            const double sq = std::sqrt(1.0 - a_e);
            for (std::size_t i = 0; i < x.data().size(); ++i) {
                x.data()[i] = static_cast<float>(
                    sa * known.data()[i] + sq * noise.data()[i]);
            }
        } else {
            x = std::move(noise);
        }
    }

    for (std::size_t k = 0; k < ts.size(); ++k) {
        const int t = ts[k];
        const double a_t = abar(t);
        const double a_prev = (k + 1 < ts.size()) ? abar(ts[k + 1]) : 1.0;
        const Image eps = den.predict_noise(x, a_t, ctx);
        x = ddim_step(x, eps, a_t, a_prev);
        Rng step_rng(derive_seed(seed, "ddim-cond", static_cast<std::uint64_t>(t)));
        const Image noise = gaussian_image(x.height(), x.width(), step_rng);
        x = condition_on_known(x, known, mask, a_prev, noise);
    }
    x.clamp01();
    return x;
}

} // namespace sinoforge::diffusion
