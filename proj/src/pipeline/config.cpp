#include "sinoforge/pipeline/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sinoforge::pipeline {

namespace {

using ordered_json = nlohmann::ordered_json;

void assign_key(RunConfig& cfg, const std::string& key, const nlohmann::json& v) {
    if (key == "T") cfg.T = v.get<int>();
    else if (key == "ddim_steps") cfg.ddim_steps = v.get<int>();
    else if (key == "beta_min") cfg.beta_min = v.get<double>();
    else if (key == "beta_max") cfg.beta_max = v.get<double>();
    else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
    else if (key == "tau") cfg.tau = v.get<double>();
    else if (key == "omega_high_fraction") cfg.omega_high_fraction = v.get<double>();
    else if (key == "background_seed") cfg.background_seed = v.get<std::uint64_t>();
    else if (key == "skip_input") cfg.skip_input = v.get<std::string>();
    else if (key == "s_min") cfg.s_min = v.get<int>();
    else if (key == "s_max") cfg.s_max = v.get<int>();
    else if (key == "entropy_bins") cfg.entropy_bins = v.get<int>();
    else if (key == "normalize_kappa") cfg.normalize_kappa = v.get<bool>();
    else if (key == "step_mode") cfg.step_mode = v.get<std::string>();
    else if (key == "patch") cfg.patch = v.get<int>();
    else if (key == "stride") cfg.stride = v.get<int>();
    else if (key == "blend_band") cfg.blend_band = v.get<int>();
    else if (key == "eta") cfg.eta = v.get<double>();
    else if (key == "enable_skip") cfg.enable_skip = v.get<bool>();
    else if (key == "enable_adaptive") cfg.enable_adaptive = v.get<bool>();
    else if (key == "enable_low") cfg.enable_low = v.get<bool>();
    else if (key == "enable_mid") cfg.enable_mid = v.get<bool>();
    else if (key == "enable_high") cfg.enable_high = v.get<bool>();
    else if (key == "denoiser") cfg.denoiser = v.get<std::string>();
    else if (key == "blur_radius") cfg.blur_radius = v.get<int>();
    else throw std::runtime_error("internal: unrouted config key " + key);
}

bool is_known_key(const std::string& key) {
    static const char* kKeys[] = {
        "T", "ddim_steps", "beta_min", "beta_max", "seed",
        "tau", "omega_high_fraction", "background_seed", "skip_input",
        "s_min", "s_max", "entropy_bins", "normalize_kappa", "step_mode",
        "patch", "stride", "blend_band", "eta",
        "enable_skip", "enable_adaptive", "enable_low", "enable_mid", "enable_high",
        "denoiser", "blur_radius",
    };
    for (const char* k : kKeys) {
        if (key == k) return true;
    }
    return false;
}

} // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("config JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("config JSON must be an object");
    std::string unknown;
    for (const auto& [key, value] : j.items()) {
        if (!is_known_key(key)) {
            if (!unknown.empty()) unknown += ", ";
            unknown += key;
        }
    }
    if (!unknown.empty()) {
        throw std::runtime_error("config JSON: unknown keys: " + unknown);
    }
    RunConfig cfg;
    for (const auto& [key, value] : j.items()) assign_key(cfg, key, value);
    cfg.validate();
    return cfg;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config JSON: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return from_json_text(ss.str());
}

std::string RunConfig::to_json_text() const {
    ordered_json j;
    j["T"] = T;
    j["ddim_steps"] = ddim_steps;
    j["beta_min"] = beta_min;
    j["beta_max"] = beta_max;
    j["seed"] = seed;
    j["tau"] = tau;
    j["omega_high_fraction"] = omega_high_fraction;
    j["background_seed"] = background_seed;
    j["skip_input"] = skip_input;
    j["s_min"] = s_min;
    j["s_max"] = s_max;
    j["entropy_bins"] = entropy_bins;
    j["normalize_kappa"] = normalize_kappa;
    j["step_mode"] = step_mode;
    j["patch"] = patch;
    j["stride"] = stride;
    j["blend_band"] = blend_band;
    j["eta"] = eta;
    j["enable_skip"] = enable_skip;
    j["enable_adaptive"] = enable_adaptive;
    j["enable_low"] = enable_low;
    j["enable_mid"] = enable_mid;
    j["enable_high"] = enable_high;
    j["denoiser"] = denoiser;
    j["blur_radius"] = blur_radius;
    return j.dump(2) + "\n";
}

void RunConfig::validate() const {
    if (T < 1) throw std::invalid_argument("config: T must be >= 1");
    if (ddim_steps < 1 || ddim_steps > T) {
        throw std::invalid_argument("config: need 1 <= ddim_steps <= T");
    }
    if (!(beta_min > 0.0) || !(beta_min <= beta_max) || !(beta_max < 1.0)) {
        throw std::invalid_argument("config: need 0 < beta_min <= beta_max < 1");
    }
    if (!(tau > 0.0)) throw std::invalid_argument("config: tau must be positive");
    if (!(omega_high_fraction > 0.0) || !(omega_high_fraction < 1.0)) {
        throw std::invalid_argument("config: omega_high_fraction must be in (0, 1)");
    }
    if (skip_input != "fused" && skip_input != "raw") {
        throw std::invalid_argument("config: skip_input must be 'fused' or 'raw'");
    }
    if (s_min < 1 || s_min > s_max) {
        throw std::invalid_argument("config: need 1 <= s_min <= s_max");
    }
    if (s_max > ddim_steps) {
        throw std::invalid_argument("config: s_max cannot exceed ddim_steps");
    }
    if (entropy_bins < 2) throw std::invalid_argument("config: entropy_bins must be >= 2");
    if (step_mode != "late_entry" && step_mode != "thinned") {
        throw std::invalid_argument("config: step_mode must be 'late_entry' or 'thinned'");
    }
    if (patch < 4) throw std::invalid_argument("config: patch must be >= 4");
    if (stride < 1 || stride > patch) {
        throw std::invalid_argument("config: need 1 <= stride <= patch");
    }
    if (blend_band < 1) throw std::invalid_argument("config: blend_band must be >= 1");
    if (eta < 0.0) throw std::invalid_argument("config: eta must be >= 0");
    if (denoiser != "blur" && denoiser != "oracle") {
        throw std::invalid_argument("config: denoiser must be 'blur' or 'oracle'");
    }
    if (blur_radius < 0) throw std::invalid_argument("config: blur_radius must be >= 0");
    if (!enable_high && !enable_low && !enable_mid) {
        throw std::invalid_argument("config: at least one stage must be enabled");
    }
}

diffusion::StepMode RunConfig::parsed_step_mode() const {
    return step_mode == "thinned" ? diffusion::StepMode::thinned
                                  : diffusion::StepMode::late_entry;
}

} // namespace sinoforge::pipeline
