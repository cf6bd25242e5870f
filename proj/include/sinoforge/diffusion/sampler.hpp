#pragma once

#include <cstdint>

#include "sinoforge/diffusion/denoiser.hpp"
#include "sinoforge/diffusion/schedule.hpp"

namespace sinoforge::diffusion {

/// How a run with fewer steps than the schedule enters the trajectory:
/// late_entry forward-diffuses the conditioning input to the entry noise
/// level and runs the schedule suffix; thinned keeps the pure-noise start
/// and subsamples the timestep list evenly.
enum class StepMode { late_entry, thinned };

/// Deterministic (eta = 0) reverse update:
/// x0 = (x_t - sqrt(1-a_t)*eps) / sqrt(a_t), then
/// sqrt(a_prev)*x0 + sqrt(1-a_prev)*eps.
Image ddim_step(const Image& x_t, const Image& eps, double a_t, double a_prev);

/// Known-region re-injection: masked-known pixels are replaced by the
/// forward-diffused known signal at level a_prev, the rest keeps x.
Image condition_on_known(const Image& x, const Image& known, const Mask& mask,
                         double a_prev, const Image& noise);

/// Mask-conditioned reverse process. Runs `steps` timesteps of the schedule
/// (the suffix in late_entry mode, an even subsample in thinned mode),
/// evaluating the denoiser exactly `steps` times, re-imposing the known
/// region after every update, and clamping the final image to [0,1]. The
/// last replacement happens at noise level 1, so known pixels of the output
/// equal `known` exactly. All noise derives from `seed`.
Image ddim_infer(const Image& known, const Mask& mask, const Denoiser& den,
                 const DiffusionSchedule& sched, int steps, std::uint64_t seed,
                 const FrameContext& ctx = FrameContext{},
                 StepMode mode = StepMode::late_entry);

} // namespace sinoforge::diffusion
