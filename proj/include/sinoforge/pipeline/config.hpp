#pragma once

#include <cstdint>
#include <string>

#include "sinoforge/diffusion/sampler.hpp"

namespace sinoforge::pipeline {

/// Complete run configuration. Every field maps 1:1 to a JSON config key of
/// the same name; the CLI mirrors keys as --kebab-case flags. Unknown JSON
/// keys are rejected with a list of offenders.
struct RunConfig {
    // Sampler schedule.
    int T = 1000;
    int ddim_steps = 50;
    double beta_min = 1e-4;
    double beta_max = 0.02;
    std::uint64_t seed = 0;

    // Patch skipping.
    double tau = 0.08;
    double omega_high_fraction = 2.0 / 3.0;
    std::uint64_t background_seed = 101;
    std::string skip_input = "fused";  // or "raw"

    // Adaptive step allocation.
    int s_min = 10;
    int s_max = 50;
    int entropy_bins = 256;
    bool normalize_kappa = false;
    std::string step_mode = "late_entry";  // or "thinned"

    // Tiling and seams.
    int patch = 128;
    int stride = 96;
    int blend_band = 32;
    double eta = 0.05;

    // Stage / feature toggles.
    bool enable_skip = true;
    bool enable_adaptive = true;
    bool enable_low = true;
    bool enable_mid = true;
    bool enable_high = true;

    // Denoiser selection (used by the CLI to build the Denoiser instance).
    std::string denoiser = "blur";  // or "oracle"
    int blur_radius = 2;

    static RunConfig from_json_text(const std::string& text);
    static RunConfig from_json_file(const std::string& path);

    /// Serialize with a fixed key order so config echoes are byte-stable.
    std::string to_json_text() const;

    void validate() const;

    diffusion::StepMode parsed_step_mode() const;
};

} // namespace sinoforge::pipeline
