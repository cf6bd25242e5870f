#pragma once

#include <cstdint>
#include <mutex>
#include <optional>

#include "sinoforge/diffusion/sampler.hpp"

namespace sinoforge::spectral {

/// Write-once cache of the fixed output substituted for skipped patches:
/// a full unconditioned sampler run (all-zeros mask) whose nominal input is
/// low-amplitude Gaussian noise, N(0, 0.01^2) clamped to [0,1]. The cache is
/// keyed on (T, N, patch_size, seed) and rebuilt only when the key changes.
class BackgroundCache {
public:
    /// Returns the cached patch, building it on first use. Thread-safe.
    const Image& get(const diffusion::Denoiser& den, const diffusion::DiffusionSchedule& sched,
                     int patch_size, std::uint64_t seed);

    int builds() const { return builds_; }

private:
    struct Key {
        int T = 0;
        int N = 0;
        int patch_size = 0;
        std::uint64_t seed = 0;
        bool operator==(const Key&) const = default;
    };

    std::mutex mutex_;
    std::optional<Key> key_;
    Image patch_;
    int builds_ = 0;
};

/// Single uncached build of the background patch (what the cache stores).
Image background_patch(const diffusion::Denoiser& den,
                       const diffusion::DiffusionSchedule& sched,
                       int patch_size, std::uint64_t seed);

} // namespace sinoforge::spectral
