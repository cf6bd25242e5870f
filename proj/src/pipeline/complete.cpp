#include "sinoforge/pipeline/complete.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "sinoforge/complexity/score.hpp"
#include "sinoforge/core/rng.hpp"
#include "sinoforge/diffusion/sampler.hpp"
#include "sinoforge/grid/resample.hpp"
#include "sinoforge/grid/sobel.hpp"
#include "sinoforge/patching/blend.hpp"
#include "sinoforge/patching/fusion.hpp"
#include "sinoforge/patching/grid.hpp"
#include "sinoforge/spectral/background.hpp"
#include "sinoforge/spectral/spectrum.hpp"

namespace sinoforge::pipeline {

namespace {

/// Nearest-neighbour upsample, cropped back to the requested dimensions
/// (reflect-padded pyramids can overshoot by up to factor-1 pixels).
Image upsample_to(const Image& img, int factor, int height, int width) {
    Image up = grid::upsample_nearest(img, factor);
    if (up.height() == height && up.width() == width) return up;
    return up.crop(Rect{0, 0, height, width});
}

/// known where the mask is set, fill elsewhere.
Image masked_merge(const Image& known, const Mask& mask, const Image& fill) {
    Image out(known.height(), known.width());
    for (std::size_t i = 0; i < out.data().size(); ++i) {
        out.data()[i] = mask.bits()[i] ? known.data()[i] : fill.data()[i];
    }
    return out;
}

} // namespace

double modeled_peak(const RunConfig& cfg, int height, int width) {
    const double low = cfg.enable_low
                           ? static_cast<double>((height + 3) / 4) * ((width + 3) / 4)
                           : 0.0;
    const double mid = cfg.enable_mid
                           ? static_cast<double>((height + 1) / 2) * ((width + 1) / 2)
                           : 0.0;
    const double high = cfg.enable_high
                            ? static_cast<double>(cfg.patch) * cfg.patch
                            : 0.0;
    const double buffers =
        3.0 * static_cast<double>(height) * static_cast<double>(width) / 4096.0;
    return std::max({low, mid, high, buffers});
}

RunReport complete(const Image& known, const Mask& mask, const diffusion::Denoiser& den_in,
                   const RunConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    cfg.validate();
    if (!mask.same_shape(known)) throw std::invalid_argument("complete: mask/image shape mismatch");
    const int height = known.height();
    const int width = known.width();
    if (height < 4 || width < 4) throw std::invalid_argument("complete: input too small");
    if (cfg.enable_high && (cfg.patch > height || cfg.patch > width)) {
        throw std::invalid_argument("complete: patch does not fit inside the input");
    }

    const auto sched = diffusion::make_schedule(cfg.T, cfg.ddim_steps, cfg.beta_min, cfg.beta_max);
    const int N = sched.num_steps();
    const auto mode = cfg.parsed_step_mode();
    const diffusion::CountingDenoiser den(den_in);

    // Stage 1: quarter resolution, fully conditioned on the pooled known data.
    std::optional<Image> x_low;
    if (cfg.enable_low) {
        const Image k_low = grid::downsample(known, 4);
        const Mask m_low = grid::downsample_mask(mask, 4);
        x_low = diffusion::ddim_infer(k_low, m_low, den, sched, N,
                                      derive_seed(cfg.seed, "stage-low"),
                                      diffusion::FrameContext{4, 0, 0}, mode);
    }

    // Stage 2: half resolution, conditioned on the prior-fused input.
    std::optional<Image> x_mid;
    if (cfg.enable_mid) {
        const Image k_mid = grid::downsample(known, 2);
        const Mask m_mid = grid::downsample_mask(mask, 2);
        Image cond = k_mid;
        if (x_low) {
            cond = patching::fuse_mid(k_mid, upsample_to(*x_low, 2, k_mid.height(), k_mid.width()));
        }
        x_mid = diffusion::ddim_infer(cond, m_mid, den, sched, N,
                                      derive_seed(cfg.seed, "stage-mid"),
                                      diffusion::FrameContext{2, 0, 0}, mode);
    }

    // Full-resolution structural prior for fusion, gap filling, and gating.
    std::optional<Image> prior;
    if (x_mid) {
        prior = upsample_to(*x_mid, 2, height, width);
    } else if (x_low) {
        prior = upsample_to(*x_low, 4, height, width);
    }

    Image out;
    std::vector<PatchRecord> records;
    std::uint64_t pixel_steps = 0;
    int skipped = 0;
    int retained = 0;
    spectral::BackgroundCache bg;

    if (!cfg.enable_high) {
        out = *prior;  // validate() guarantees some stage is enabled
    } else {
        // Missing pixels take the prior value so patch scoring sees fused
        // content instead of mask seams.
        const Image filled = prior ? masked_merge(known, mask, *prior) : known;
        const auto pgrid = patching::build_grid(height, width, cfg.patch, cfg.stride);
        const std::size_t n = pgrid.count();

        // Scoring pass over every patch; step allocation needs the full
        // kappa population before any inference starts.
        std::vector<Image> fused(n);
        std::vector<spectral::SpectralScore> scores(n);
        std::vector<complexity::ComplexityScore> comps(n);
        std::vector<double> kappas(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Rect rect = pgrid.rect_at(i);
            const Image patch_in = filled.crop(rect);
            fused[i] = prior ? patching::fuse_patch(patch_in, prior->crop(rect)) : patch_in;
            const Mask mask_p = mask.crop(rect);
            if (cfg.skip_input == "raw") {
                // Raw scoring sees the measurement as acquired: missing
                // pixels are zero, not prior-filled.
                Image raw = known.crop(rect);
                for (int r = 0; r < raw.height(); ++r) {
                    for (int c = 0; c < raw.width(); ++c) {
                        if (!mask_p.at(r, c)) raw.at(r, c) = 0.0f;
                    }
                }
                scores[i] = spectral::should_skip(raw, mask_p, cfg.tau, cfg.omega_high_fraction);
            } else {
                scores[i] = spectral::should_skip(fused[i], mask_p, cfg.tau,
                                                  cfg.omega_high_fraction);
            }
            if (!cfg.enable_skip) scores[i].skip = false;
            comps[i] = complexity::kappa(fused[i], cfg.entropy_bins);
            kappas[i] = comps[i].kappa;
        }
        const auto alloc =
            complexity::allocate_steps(kappas, cfg.s_min, cfg.s_max, cfg.normalize_kappa);

        // Inference pass, sequential in grid order.
        std::vector<Image> outputs(n);
        records.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Rect rect = pgrid.rect_at(i);
            PatchRecord rec;
            rec.row = rect.row;
            rec.col = rect.col;
            rec.gamma = scores[i].gamma;
            rec.mask_ratio = scores[i].mask_ratio;
            rec.adjusted = scores[i].adjusted;
            rec.skip = scores[i].skip;
            rec.entropy = comps[i].entropy;
            rec.spectral_l1 = comps[i].spectral_l1;
            rec.kappa = comps[i].kappa;
            if (scores[i].skip) {
                outputs[i] = bg.get(den, sched, cfg.patch,
                                    derive_seed(cfg.seed, "background", cfg.background_seed));
                ++skipped;
                rec.steps = 0;
            } else {
                const int steps = cfg.enable_adaptive ? alloc.per_patch_steps[i] : N;
                outputs[i] = diffusion::ddim_infer(
                    fused[i], mask.crop(rect), den, sched, steps,
                    derive_seed(cfg.seed, "patch", static_cast<std::uint64_t>(rect.row),
                                static_cast<std::uint64_t>(rect.col)),
                    diffusion::FrameContext{1, rect.row, rect.col}, mode);
                pixel_steps += static_cast<std::uint64_t>(cfg.patch) * cfg.patch *
                               static_cast<std::uint64_t>(steps);
                ++retained;
                rec.steps = steps;
            }
            records.push_back(rec);
        }

        // Seam gating uses the [0,1]-normalized gradient of the prior (the
        // filled input when no coarse stage ran).
        Image grad = grid::sobel_magnitude(prior ? *prior : filled);
        grad.minmax_normalize();
        out = patching::assemble(outputs, pgrid, grad,
                                 patching::BlendPolicy{cfg.eta, cfg.blend_band});
    }

    // Measurements are ground truth: re-impose them after assembly/blending.
    out = masked_merge(known, mask, out);
    out.clamp01();

    RunReport report;
    report.completed = std::move(out);
    report.ledger.denoiser_evals = den.count();
    report.ledger.background_evals =
        static_cast<std::uint64_t>(bg.builds()) * static_cast<std::uint64_t>(N);
    report.ledger.pixel_steps = pixel_steps;
    report.ledger.skipped_patches = skipped;
    report.ledger.retained_patches = retained;
    report.ledger.modeled_peak = modeled_peak(cfg, height, width);
    report.patches = std::move(records);
    report.ledger.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return report;
}

const std::vector<std::string>& ablation_variants() {
    static const std::vector<std::string> names = {
        "full", "no_low", "no_mid", "no_high", "no_adaptive", "no_skip",
    };
    return names;
}

std::vector<std::pair<std::string, RunReport>> ablate(const Image& known, const Mask& mask,
                                                      const diffusion::Denoiser& den,
                                                      const RunConfig& base_cfg) {
    RunConfig full = base_cfg;
    full.enable_low = true;
    full.enable_mid = true;
    full.enable_high = true;
    full.enable_adaptive = true;
    full.enable_skip = true;

    std::vector<std::pair<std::string, RunReport>> results;
    for (const std::string& name : ablation_variants()) {
        RunConfig cfg = full;
        if (name == "no_low") cfg.enable_low = false;
        else if (name == "no_mid") cfg.enable_mid = false;
        else if (name == "no_high") cfg.enable_high = false;
        else if (name == "no_adaptive") cfg.enable_adaptive = false;
        else if (name == "no_skip") cfg.enable_skip = false;
        results.emplace_back(name, complete(known, mask, den, cfg));
    }
    return results;
}

} // namespace sinoforge::pipeline
