#include "sinoforge/tomo/phantom.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sinoforge::tomo {

Phantom Phantom::standard_head(int size) {
    Phantom ph;
    ph.size = size;
    ph.ellipses = {
        {0.0, 0.0, 0.86, 0.92, 0.0, 0.30},    // skull
        {0.0, 0.0, 0.78, 0.85, 0.0, 0.25},    // interior lift
        {0.20, -0.15, 0.28, 0.40, -18.0, 0.22},
        {-0.22, -0.15, 0.25, 0.38, 18.0, 0.18},
        {0.0, 0.32, 0.18, 0.24, 0.0, 0.15},
        {-0.08, 0.05, 0.046, 0.046, 0.0, 0.12},
        {0.06, -0.58, 0.066, 0.046, 0.0, 0.10},
        {0.0, 0.1, 0.56, 0.3, 90.0, 0.05},
    };
    return ph;
}

namespace {

Ellipse ellipse_from_json(const nlohmann::json& j) {
    Ellipse e;
    for (const auto& [key, value] : j.items()) {
        if (key == "cx") e.cx = value.get<double>();
        else if (key == "cy") e.cy = value.get<double>();
        else if (key == "a") e.a = value.get<double>();
        else if (key == "b") e.b = value.get<double>();
        else if (key == "angle_deg") e.angle_deg = value.get<double>();
        else if (key == "value") e.value = value.get<double>();
        else throw std::runtime_error("phantom JSON: unknown ellipse key '" + key + "'");
    }
    if (e.a <= 0.0 || e.b <= 0.0) throw std::runtime_error("phantom JSON: semi-axes must be positive");
    return e;
}

} // namespace

Phantom Phantom::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("phantom JSON parse error: ") + e.what());
    }
    Phantom ph;
    bool saw_ellipses = false;
    for (const auto& [key, value] : j.items()) {
        if (key == "size") {
            ph.size = value.get<int>();
        } else if (key == "ellipses") {
            saw_ellipses = true;
            for (const auto& el : value) ph.ellipses.push_back(ellipse_from_json(el));
        } else {
            throw std::runtime_error("phantom JSON: unknown key '" + key + "'");
        }
    }
    if (!saw_ellipses || ph.ellipses.empty()) {
        throw std::runtime_error("phantom JSON: at least one ellipse required");
    }
    if (ph.size < 16) throw std::runtime_error("phantom JSON: size must be >= 16");
    return ph;
}

Phantom Phantom::from_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open phantom JSON: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return from_json_text(ss.str());
}

Image rasterize(const Phantom& ph) {
    if (ph.size < 16) throw std::invalid_argument("rasterize: size must be >= 16");
    if (ph.ellipses.empty()) throw std::invalid_argument("rasterize: phantom has no ellipses");
    const int n = ph.size;
    constexpr int kSub = 8;
    const double inv_sub = 1.0 / kSub;

    struct PreparedEllipse {
        double cx, cy, cosb, sinb, inv_a2, inv_b2, value;
    };
    std::vector<PreparedEllipse> prep;
    prep.reserve(ph.ellipses.size());
    for (const Ellipse& e : ph.ellipses) {
        const double rad = e.angle_deg * std::numbers::pi / 180.0;
        prep.push_back({e.cx, e.cy, std::cos(rad), std::sin(rad),
                        1.0 / (e.a * e.a), 1.0 / (e.b * e.b), e.value});
    }

    Image out(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            double acc = 0.0;
            for (int sr = 0; sr < kSub; ++sr) {
                // Subsample centers mapped to [-1, 1].
                const double y = 2.0 * (r + (sr + 0.5) * inv_sub) / n - 1.0;
                for (int sc = 0; sc < kSub; ++sc) {
                    const double x = 2.0 * (c + (sc + 0.5) * inv_sub) / n - 1.0;
                    double v = 0.0;
                    for (const PreparedEllipse& e : prep) {
                        const double dx = x - e.cx;
                        const double dy = y - e.cy;
                        const double u = dx * e.cosb + dy * e.sinb;
                        const double w = -dx * e.sinb + dy * e.cosb;
                        if (u * u * e.inv_a2 + w * w * e.inv_b2 <= 1.0) v += e.value;
                    }
                    acc += std::clamp(v, 0.0, 1.0);
                }
            }
            out.at(r, c) = static_cast<float>(acc / (kSub * kSub));
        }
    }
    return out;
}

} // namespace sinoforge::tomo
