// Command-line driver: synthetic data generation, masking, completion runs,
// ablations, benchmarks, metrics, and the tau sweep. Every subcommand is
// deterministic for fixed flags and seed; timing goes to stderr only.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sinoforge/diffusion/denoiser.hpp"
#include "sinoforge/grid/io.hpp"
#include "sinoforge/grid/resample.hpp"
#include "sinoforge/metrics/quality.hpp"
#include "sinoforge/pipeline/complete.hpp"
#include "sinoforge/tomo/masks.hpp"
#include "sinoforge/tomo/phantom.hpp"
#include "sinoforge/tomo/scan.hpp"

namespace sf = sinoforge;
namespace fs = std::filesystem;

namespace {

void require_directory(const std::string& dir) {
    if (!fs::is_directory(dir)) {
        throw std::runtime_error("output directory does not exist: " + dir);
    }
}

std::string joined(const std::string& dir, const char* name) {
    return (fs::path(dir) / name).string();
}

/// Load --config before CLI11 applies flag overrides, so flags always win.
sf::pipeline::RunConfig preload_config(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            return sf::pipeline::RunConfig::from_json_file(args[i + 1]);
        }
        if (args[i].rfind("--config=", 0) == 0) {
            return sf::pipeline::RunConfig::from_json_file(args[i].substr(9));
        }
    }
    return {};
}

/// Register the config-mirroring flags (kebab-case of the JSON keys).
void add_config_flags(CLI::App* cmd, sf::pipeline::RunConfig& cfg) {
    cmd->add_option("--config", "JSON config file (flags override its values)");
    cmd->add_option("--T", cfg.T, "training-step count");
    cmd->add_option("--ddim-steps", cfg.ddim_steps, "sampler step count");
    cmd->add_option("--beta-min", cfg.beta_min, "linear schedule start");
    cmd->add_option("--beta-max", cfg.beta_max, "linear schedule end");
    cmd->add_option("--seed", cfg.seed, "master seed for all randomness");
    cmd->add_option("--tau", cfg.tau, "skip threshold");
    cmd->add_option("--omega-high-fraction", cfg.omega_high_fraction, "high-band cutoff");
    cmd->add_option("--background-seed", cfg.background_seed, "background patch seed");
    cmd->add_option("--skip-input", cfg.skip_input, "score the 'fused' or 'raw' patch");
    cmd->add_option("--s-min", cfg.s_min, "minimum per-patch steps");
    cmd->add_option("--s-max", cfg.s_max, "maximum per-patch steps");
    cmd->add_option("--entropy-bins", cfg.entropy_bins, "histogram bins");
    cmd->add_flag("--normalize-kappa,!--no-normalize-kappa", cfg.normalize_kappa,
                  "variance-normalize the sigmoid argument");
    cmd->add_option("--step-mode", cfg.step_mode, "'late_entry' or 'thinned'");
    cmd->add_option("--patch", cfg.patch, "patch size");
    cmd->add_option("--stride", cfg.stride, "patch stride");
    cmd->add_option("--blend-band", cfg.blend_band, "seam band width");
    cmd->add_option("--eta", cfg.eta, "gradient threshold enabling blending");
    cmd->add_flag("--enable-skip,!--no-skip", cfg.enable_skip, "patch skipping");
    cmd->add_flag("--enable-adaptive,!--no-adaptive", cfg.enable_adaptive,
                  "adaptive step allocation");
    cmd->add_flag("--enable-low,!--no-low", cfg.enable_low, "quarter-resolution stage");
    cmd->add_flag("--enable-mid,!--no-mid", cfg.enable_mid, "half-resolution stage");
    cmd->add_flag("--enable-high,!--no-high", cfg.enable_high, "full-resolution patch stage");
    cmd->add_option("--denoiser", cfg.denoiser, "'blur' or 'oracle' (oracle needs --gt)");
    cmd->add_option("--blur-radius", cfg.blur_radius, "blur denoiser radius");
}

using sf::diffusion::BlurDenoiser;
using sf::diffusion::Denoiser;
using sf::diffusion::OracleDenoiser;

std::unique_ptr<Denoiser> build_denoiser(const sf::pipeline::RunConfig& cfg,
                                         const std::optional<sf::Image>& gt) {
    if (cfg.denoiser == "oracle") {
        if (!gt) throw std::runtime_error("denoiser 'oracle' requires --gt");
        return std::make_unique<OracleDenoiser>(*gt);
    }
    return std::make_unique<BlurDenoiser>(cfg.blur_radius);
}

void print_ledger(std::ostream& os, const sf::pipeline::CostLedger& ledger) {
    os << "denoiser_evals=" << ledger.denoiser_evals << "\n"
       << "background_evals=" << ledger.background_evals << "\n"
       << "pixel_steps=" << ledger.pixel_steps << "\n"
       << "skipped_patches=" << ledger.skipped_patches << "\n"
       << "retained_patches=" << ledger.retained_patches << "\n"
       << "modeled_peak=" << sf::pipeline::format_double(ledger.modeled_peak) << "\n";
}

void write_report(const sf::pipeline::RunReport& report, const sf::pipeline::RunConfig& cfg,
                  const std::string& out_dir) {
    sf::grid::save_sgf(report.completed, joined(out_dir, "completed.sgf"));
    sf::grid::save_pgm16(report.completed, joined(out_dir, "completed.pgm"));
    sf::pipeline::write_ledger_csv(report.ledger, joined(out_dir, "ledger.csv"));
    sf::pipeline::write_patches_csv(report.patches, joined(out_dir, "patches.csv"));
    std::ofstream cfg_os(joined(out_dir, "config.json"));
    if (!cfg_os) throw std::runtime_error("cannot write config echo in " + out_dir);
    cfg_os << cfg.to_json_text();
}

std::vector<double> parse_double_list(const std::string& csv, const char* what) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::runtime_error(std::string(what) + ": empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
    std::vector<int> out;
    for (double v : parse_double_list(csv, what)) out.push_back(static_cast<int>(v));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"sinoforge: resolution-guided diffusion completion of sinograms"};
    app.require_subcommand(1);
    std::vector<std::string> raw_args(argv + 1, argv + argc);

    // ---- synth ----------------------------------------------------------
    auto* synth = app.add_subcommand("synth", "rasterize a phantom and write its sinogram");
    struct {
        int size = 128;
        int angles = 180;
        int detectors = 0;  // 0: match size
        std::string phantom;
        std::string out;
    } sy;
    synth->add_option("--size", sy.size, "phantom size in pixels");
    synth->add_option("--angles", sy.angles, "projection angle count");
    synth->add_option("--detectors", sy.detectors, "detector count (default: size)");
    synth->add_option("--phantom", sy.phantom, "phantom JSON (default: built-in head)");
    synth->add_option("--out", sy.out, "output directory")->required();
    synth->callback([&] {
        require_directory(sy.out);
        const auto ph = sy.phantom.empty()
                            ? sf::tomo::Phantom::standard_head(sy.size)
                            : [&] {
                                  auto p = sf::tomo::Phantom::from_json_file(sy.phantom);
                                  p.size = sy.size;
                                  return p;
                              }();
        const sf::Image img = sf::tomo::rasterize(ph);
        const sf::tomo::ScanGeometry geom{sy.angles, sy.detectors > 0 ? sy.detectors : sy.size};
        sf::Image sino = sf::tomo::radon(img, geom);
        sino.minmax_normalize();  // sinograms are consumed in [0,1]
        sf::grid::save_sgf(img, joined(sy.out, "phantom.sgf"));
        sf::grid::save_pgm16(img, joined(sy.out, "phantom.pgm"));
        sf::grid::save_sgf(sino, joined(sy.out, "sinogram.sgf"));
        sf::grid::save_pgm16(sino, joined(sy.out, "sinogram.pgm"));
        std::cout << "phantom=" << img.height() << "x" << img.width()
                  << " sinogram=" << sino.height() << "x" << sino.width() << "\n";
    });

    // ---- mask -----------------------------------------------------------
    auto* mask_cmd = app.add_subcommand("mask", "generate an angular subsampling mask");
    struct {
        int angles = 180;
        int detectors = 128;
        double ratio = 0.8;
        std::string kind = "random";
        std::uint64_t seed = 0;
        std::string out;
        std::string preview;
    } mk;
    mask_cmd->add_option("--angles", mk.angles, "mask height (angle rows)");
    mask_cmd->add_option("--detectors", mk.detectors, "mask width");
    mask_cmd->add_option("--ratio", mk.ratio, "fraction of angles removed");
    mask_cmd->add_option("--kind", mk.kind, "'random' or 'periodic'");
    mask_cmd->add_option("--seed", mk.seed, "seed for the random kind");
    mask_cmd->add_option("--out", mk.out, "output SGM1 path")->required();
    mask_cmd->add_option("--preview", mk.preview, "optional PGM preview path");
    mask_cmd->callback([&] {
        sf::Mask mask;
        if (mk.kind == "random") {
            mask = sf::tomo::random_angle_mask(mk.angles, mk.detectors, mk.ratio, mk.seed);
        } else if (mk.kind == "periodic") {
            mask = sf::tomo::periodic_angle_mask(mk.angles, mk.detectors, mk.ratio);
        } else {
            throw std::runtime_error("mask kind must be 'random' or 'periodic'");
        }
        sf::grid::save_sgm(mask, mk.out);
        if (!mk.preview.empty()) {
            sf::Image img(mask.height(), mask.width());
            for (std::size_t i = 0; i < img.data().size(); ++i) {
                img.data()[i] = static_cast<float>(mask.bits()[i]);
            }
            sf::grid::save_pgm16(img, mk.preview);
        }
        std::cout << "kept_angles=" << [&] {
            int kept = 0;
            for (int r = 0; r < mask.height(); ++r) kept += mask.at(r, 0) ? 1 : 0;
            return kept;
        }() << "\n";
    });

    // ---- complete -------------------------------------------------------
    auto* comp = app.add_subcommand("complete", "run the full completion pipeline");
    struct {
        std::string in, mask, gt, out;
    } co;
    sf::pipeline::RunConfig co_cfg = preload_config(raw_args);
    comp->add_option("--in", co.in, "input sinogram (SGF1)")->required();
    comp->add_option("--mask", co.mask, "mask (SGM1)")->required();
    comp->add_option("--gt", co.gt, "ground truth (SGF1), enables metrics + oracle");
    comp->add_option("--out", co.out, "output directory")->required();
    add_config_flags(comp, co_cfg);
    comp->callback([&] {
        require_directory(co.out);
        const sf::Image input = sf::grid::load_sgf(co.in);
        const sf::Mask mask = sf::grid::load_sgm(co.mask);
        std::optional<sf::Image> gt;
        if (!co.gt.empty()) gt = sf::grid::load_sgf(co.gt);
        const auto den = build_denoiser(co_cfg, gt);
        const auto report = sf::pipeline::complete(input, mask, *den, co_cfg);
        write_report(report, co_cfg, co.out);
        print_ledger(std::cout, report.ledger);
        if (gt) {
            const auto q = sf::metrics::quality(report.completed, *gt);
            std::cout << "ssim=" << sf::pipeline::format_double(q.ssim)
                      << "\npsnr=" << sf::pipeline::format_double(q.psnr) << "\n";
        }
        std::cerr << "completed in " << report.ledger.wall_time_s << " s\n";
    });

    // ---- ablate ---------------------------------------------------------
    auto* abl = app.add_subcommand("ablate", "run the six-variant toggle study");
    struct {
        std::string in, mask, gt, out;
    } ab;
    sf::pipeline::RunConfig ab_cfg = preload_config(raw_args);
    abl->add_option("--in", ab.in, "input sinogram (SGF1)")->required();
    abl->add_option("--mask", ab.mask, "mask (SGM1)")->required();
    abl->add_option("--gt", ab.gt, "ground truth (SGF1)");
    abl->add_option("--out", ab.out, "output directory")->required();
    add_config_flags(abl, ab_cfg);
    abl->callback([&] {
        require_directory(ab.out);
        const sf::Image input = sf::grid::load_sgf(ab.in);
        const sf::Mask mask = sf::grid::load_sgm(ab.mask);
        std::optional<sf::Image> gt;
        if (!ab.gt.empty()) gt = sf::grid::load_sgf(ab.gt);
        const auto den = build_denoiser(ab_cfg, gt);
        const auto results = sf::pipeline::ablate(input, mask, *den, ab_cfg);
        std::ofstream csv(joined(ab.out, "ablate.csv"));
        if (!csv) throw std::runtime_error("cannot write ablate.csv in " + ab.out);
        csv << "variant,ssim,psnr,denoiser_evals,background_evals,pixel_steps,"
               "skipped_patches,retained_patches,modeled_peak\n";
        for (const auto& [name, report] : results) {
            csv << name << ',';
            if (gt) {
                const auto q = sf::metrics::quality(report.completed, *gt);
                csv << sf::pipeline::format_double(q.ssim) << ','
                    << sf::pipeline::format_double(q.psnr);
            } else {
                csv << ',';
            }
            csv << ',' << report.ledger.denoiser_evals << ','
                << report.ledger.background_evals << ',' << report.ledger.pixel_steps << ','
                << report.ledger.skipped_patches << ',' << report.ledger.retained_patches
                << ',' << sf::pipeline::format_double(report.ledger.modeled_peak) << "\n";
            std::cout << name << ": evals=" << report.ledger.denoiser_evals
                      << " pixel_steps=" << report.ledger.pixel_steps
                      << " skipped=" << report.ledger.skipped_patches << "\n";
        }
    });

    // ---- bench ----------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "cost-model benchmark on synthetic inputs");
    struct {
        std::string sizes = "256";
        double ratio = 0.8;
        std::string out;
    } be;
    sf::pipeline::RunConfig be_cfg = preload_config(raw_args);
    bench->add_option("--sizes", be.sizes, "comma-separated square sizes");
    bench->add_option("--ratio", be.ratio, "mask ratio per run");
    bench->add_option("--out", be.out, "output CSV path")->required();
    add_config_flags(bench, be_cfg);
    bench->callback([&] {
        std::ofstream csv(be.out);
        if (!csv) throw std::runtime_error("cannot write: " + be.out);
        csv << "size,denoiser_evals,background_evals,pixel_steps,skipped_patches,"
               "retained_patches,modeled_peak,full_frame_peak,wall_time_s\n";
        for (int size : parse_int_list(be.sizes, "--sizes")) {
            const auto ph = sf::tomo::Phantom::standard_head(size);
            const sf::Image img = sf::tomo::rasterize(ph);
            sf::Image sino = sf::tomo::radon(img, {size, size});
            sino.minmax_normalize();
            const sf::Mask mask =
                sf::tomo::random_angle_mask(size, size, be.ratio, be_cfg.seed);
            sf::pipeline::RunConfig cfg = be_cfg;
            cfg.denoiser = "blur";
            const auto den = build_denoiser(cfg, std::nullopt);
            const auto report = sf::pipeline::complete(sino, mask, *den, cfg);
            csv << size << ',' << report.ledger.denoiser_evals << ','
                << report.ledger.background_evals << ',' << report.ledger.pixel_steps << ','
                << report.ledger.skipped_patches << ',' << report.ledger.retained_patches << ','
                << sf::pipeline::format_double(report.ledger.modeled_peak) << ','
                << sf::pipeline::format_double(static_cast<double>(size) * size) << ','
                << sf::pipeline::format_double(report.ledger.wall_time_s) << "\n";
            std::cout << "size=" << size << " evals=" << report.ledger.denoiser_evals
                      << " skipped=" << report.ledger.skipped_patches << "\n";
        }
    });

    // ---- metrics --------------------------------------------------------
    auto* met = app.add_subcommand("metrics", "SSIM/PSNR between two SGF1 images");
    struct {
        std::string a, b;
    } me;
    met->add_option("--a", me.a, "first image")->required();
    met->add_option("--b", me.b, "second image")->required();
    met->callback([&] {
        const auto q = sf::metrics::quality(sf::grid::load_sgf(me.a), sf::grid::load_sgf(me.b));
        std::cout << "ssim=" << sf::pipeline::format_double(q.ssim)
                  << " psnr=" << sf::pipeline::format_double(q.psnr) << "\n";
        std::cout << sf::pipeline::format_double(q.ssim) << ','
                  << sf::pipeline::format_double(q.psnr) << "\n";
    });

    // ---- sweep-tau ------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep-tau", "re-run completion across tau values");
    struct {
        std::string in, mask, gt, out;
        std::string taus = "0.05,0.08,0.12";
    } sw;
    sf::pipeline::RunConfig sw_cfg = preload_config(raw_args);
    sweep->add_option("--in", sw.in, "input sinogram (SGF1)")->required();
    sweep->add_option("--mask", sw.mask, "mask (SGM1)")->required();
    sweep->add_option("--gt", sw.gt, "ground truth (SGF1)")->required();
    sweep->add_option("--taus", sw.taus, "comma-separated tau values");
    sweep->add_option("--out", sw.out, "output CSV path")->required();
    add_config_flags(sweep, sw_cfg);
    sweep->callback([&] {
        const sf::Image input = sf::grid::load_sgf(sw.in);
        const sf::Mask mask = sf::grid::load_sgm(sw.mask);
        const sf::Image gt = sf::grid::load_sgf(sw.gt);
        const auto den = build_denoiser(sw_cfg, gt);
        std::ofstream csv(sw.out);
        if (!csv) throw std::runtime_error("cannot write: " + sw.out);
        csv << "tau,ssim,psnr,skipped_patches,pixel_steps\n";
        for (double tau : parse_double_list(sw.taus, "--taus")) {
            sf::pipeline::RunConfig cfg = sw_cfg;
            cfg.tau = tau;
            const auto report = sf::pipeline::complete(input, mask, *den, cfg);
            const auto q = sf::metrics::quality(report.completed, gt);
            csv << sf::pipeline::format_double(tau) << ','
                << sf::pipeline::format_double(q.ssim) << ','
                << sf::pipeline::format_double(q.psnr) << ','
                << report.ledger.skipped_patches << ',' << report.ledger.pixel_steps << "\n";
            std::cout << "tau=" << sf::pipeline::format_double(tau)
                      << " skipped=" << report.ledger.skipped_patches << "\n";
        }
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
