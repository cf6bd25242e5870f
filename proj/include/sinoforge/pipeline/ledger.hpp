#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sinoforge/core/image.hpp"

namespace sinoforge::pipeline {

/// Analytic cost accounting for one completion run. background_evals is the
/// subset of denoiser_evals spent building the skipped-patch background (0
/// when nothing was skipped); pixel_steps counts high-stage patch work only
/// (patch pixels x steps, skipped patches contribute 0).
struct CostLedger {
    std::uint64_t denoiser_evals = 0;
    std::uint64_t background_evals = 0;
    std::uint64_t pixel_steps = 0;
    int skipped_patches = 0;
    int retained_patches = 0;
    double modeled_peak = 0.0;
    double wall_time_s = 0.0;
};

/// One high-stage patch: its anchor, skip scoring, complexity, and the step
/// count actually run (0 when skipped).
struct PatchRecord {
    int row = 0;
    int col = 0;
    double gamma = 0.0;
    double mask_ratio = 0.0;
    double adjusted = 0.0;
    bool skip = false;
    double entropy = 0.0;
    double spectral_l1 = 0.0;
    double kappa = 0.0;
    int steps = 0;
};

struct RunReport {
    Image completed;
    CostLedger ledger;
    std::vector<PatchRecord> patches;
};

/// CSV column order:
/// denoiser_evals,background_evals,pixel_steps,skipped_patches,
/// retained_patches,modeled_peak,wall_time_s
void write_ledger_csv(const CostLedger& ledger, const std::string& path);

/// CSV column order:
/// row,col,gamma,mask_ratio,adjusted,skip,entropy,spectral_l1,kappa,steps
void write_patches_csv(const std::vector<PatchRecord>& records, const std::string& path);

std::string format_double(double v);

} // namespace sinoforge::pipeline
