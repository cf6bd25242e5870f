#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "sinoforge/core/image.hpp"

namespace sinoforge {

/// Deterministic pseudo-random source. All randomness in the library flows
/// through this wrapper so that runs are reproducible across platforms:
/// mt19937_64 has a standard-mandated output sequence, uniform integers use
/// rejection sampling instead of std::uniform_int_distribution (whose mapping
/// is implementation-defined), and normals use Box-Muller on exactly
/// representable uniforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound) by rejection; bound must be > 0.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Standard normal via Box-Muller (one sample per call; the pair's second
    /// element is cached).
    double gaussian();

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    /// Choose k distinct indices from [0, n) (order randomized).
    std::vector<int> sample_without_replacement(int n, int k);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Derive a sub-stream seed from a base seed, a purpose label, and optional
/// integer qualifiers. Uses splitmix64-style avalanche mixing over the FNV-1a
/// hash of the label so distinct purposes get decorrelated streams.
std::uint64_t derive_seed(std::uint64_t base, std::string_view purpose,
                          std::uint64_t a = 0, std::uint64_t b = 0);

/// Image whose pixels are iid N(mean, sigma^2), filled in row-major order.
Image gaussian_image(int height, int width, Rng& rng, double mean = 0.0, double sigma = 1.0);

} // namespace sinoforge
