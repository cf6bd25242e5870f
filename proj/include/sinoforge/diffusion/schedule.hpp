#pragma once

#include <vector>

namespace sinoforge::diffusion {

/// Linear-beta noise schedule plus the subsampled timestep list used by the
/// deterministic sampler. alpha_bar[0] = 1 exactly; alpha_bar[t] =
/// prod_{s<=t}(1 - beta_s) is strictly decreasing; timesteps are strictly
/// descending and end at 0.
struct DiffusionSchedule {
    int T = 1000;
    std::vector<double> alpha_bar;  // length T+1
    std::vector<int> ddim_steps;    // length N

    int num_steps() const { return static_cast<int>(ddim_steps.size()); }
};

/// Build a schedule with betas linearly spaced over [beta_min, beta_max] and
/// ddim_steps = round(T*k/N) for k = N-1 .. 0 (N values, last one 0).
DiffusionSchedule make_schedule(int T, int N, double beta_min, double beta_max);

} // namespace sinoforge::diffusion
