#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sinoforge/diffusion/denoiser.hpp"
#include "sinoforge/pipeline/config.hpp"
#include "sinoforge/pipeline/ledger.hpp"

namespace sinoforge::pipeline {

/// Three-stage mask-conditioned completion. Quarter- and half-resolution
/// passes build a structural prior, the full-resolution pass runs patch-wise
/// with spectral skipping and complexity-driven step allocation, and the
/// assembled result has the measured (masked-known) pixels re-imposed
/// exactly. Deterministic for fixed (inputs, cfg): wall_time_s is the only
/// field that varies between runs.
RunReport complete(const Image& known, const Mask& mask, const diffusion::Denoiser& den,
                   const RunConfig& cfg);

/// Toggle-ablation variant names, in the fixed order the study table uses.
const std::vector<std::string>& ablation_variants();

/// Run complete() once per ablation variant (all toggles on, then each of
/// low/mid/high/adaptive/skip disabled in turn) with a shared seed.
std::vector<std::pair<std::string, RunReport>> ablate(const Image& known, const Mask& mask,
                                                      const diffusion::Denoiser& den,
                                                      const RunConfig& base_cfg);

/// Closed-form activation footprint (in per-pixel units, C_act = 1):
/// max over the enabled quarter-frame, half-frame, and patch stages, plus a
/// term for three full-resolution float buffers weighted 1/4096 per pixel
/// (a denoiser's activations outweigh plain image buffers by roughly three
/// orders of magnitude, so buffers only matter when every stage is off).
double modeled_peak(const RunConfig& cfg, int height, int width);

} // namespace sinoforge::pipeline
