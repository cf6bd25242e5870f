#include "sinoforge/diffusion/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace sinoforge::diffusion {

DiffusionSchedule make_schedule(int T, int N, double beta_min, double beta_max) {
    if (N < 1 || N > T) throw std::invalid_argument("make_schedule: need 1 <= N <= T");
    if (!(beta_min > 0.0) || !(beta_min <= beta_max) || !(beta_max < 1.0)) {
        throw std::invalid_argument("make_schedule: need 0 < beta_min <= beta_max < 1");
    }
    DiffusionSchedule sched;
    sched.T = T;
    sched.alpha_bar.resize(static_cast<std::size_t>(T) + 1);
    sched.alpha_bar[0] = 1.0;
    double prod = 1.0;
    for (int t = 1; t <= T; ++t) {
        const double beta =
            (T == 1) ? beta_min
                     : beta_min + (beta_max - beta_min) * static_cast<double>(t - 1) / (T - 1);
        prod *= 1.0 - beta;
        sched.alpha_bar[static_cast<std::size_t>(t)] = prod;
    }
    if (!(sched.alpha_bar[static_cast<std::size_t>(T)] > 0.0)) {
        throw std::invalid_argument("make_schedule: alpha_bar underflowed to zero");
    }
    sched.ddim_steps.reserve(static_cast<std::size_t>(N));
    for (int k = N - 1; k >= 0; --k) {
        sched.ddim_steps.push_back(static_cast<int>(
            std::lround(static_cast<double>(T) * k / N)));
    }
    return sched;
}

} // namespace sinoforge::diffusion
