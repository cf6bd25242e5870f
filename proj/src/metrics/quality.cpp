#include "sinoforge/metrics/quality.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sinoforge::metrics {

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

const std::vector<double>& gaussian_window() {
    static const std::vector<double> window = [] {
        std::vector<double> w1(kWindow);
        const double mid = (kWindow - 1) / 2.0;
        double sum = 0.0;
        for (int i = 0; i < kWindow; ++i) {
            w1[static_cast<std::size_t>(i)] = std::exp(-(i - mid) * (i - mid) / (2.0 * kSigma * kSigma));
            sum += w1[static_cast<std::size_t>(i)];
        }
        for (double& v : w1) v /= sum;
        std::vector<double> w2(static_cast<std::size_t>(kWindow) * kWindow);
        for (int r = 0; r < kWindow; ++r) {
            for (int c = 0; c < kWindow; ++c) {
                w2[static_cast<std::size_t>(r) * kWindow + c] =
                    w1[static_cast<std::size_t>(r)] * w1[static_cast<std::size_t>(c)];
            }
        }
        return w2;
    }();
    return window;
}

void check_pair(const Image& a, const Image& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("metrics: image shapes differ");
}

} // namespace

double ssim(const Image& a, const Image& b) {
    check_pair(a, b);
    if (a.height() < kWindow || a.width() < kWindow) {
        throw std::invalid_argument("ssim: image smaller than the 11x11 window");
    }
    const auto& w = gaussian_window();
    const int hpos = a.height() - kWindow + 1;
    const int wpos = a.width() - kWindow + 1;
    double total = 0.0;
    for (int r = 0; r < hpos; ++r) {
        for (int c = 0; c < wpos; ++c) {
            double mx = 0.0, my = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
            for (int i = 0; i < kWindow; ++i) {
                for (int j = 0; j < kWindow; ++j) {
                    const double wij = w[static_cast<std::size_t>(i) * kWindow + j];
                    const double x = a.at(r + i, c + j);
                    const double y = b.at(r + i, c + j);
                    mx += wij * x;
                    my += wij * y;
                    sxx += wij * x * x;
                    syy += wij * y * y;
                    sxy += wij * (x * y);  // grouped so swapping a/b is bit-exact
                }
            }
            const double vx = sxx - mx * mx;
            const double vy = syy - my * my;
            const double cxy = sxy - mx * my;
            const double num = (2.0 * (mx * my) + kC1) * (2.0 * cxy + kC2);
            const double den = (mx * mx + my * my + kC1) * (vx + vy + kC2);
            // Identical windows make num and den bitwise equal, so the ratio
            // is exactly 1.
            total += (num == den) ? 1.0 : num / den;
        }
    }
    return total / (static_cast<double>(hpos) * wpos);
}

double psnr(const Image& a, const Image& b) {
    check_pair(a, b);
    double se = 0.0;
    const auto& da = a.data();
    const auto& db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        const double d = static_cast<double>(da[i]) - static_cast<double>(db[i]);
        se += d * d;
    }
    const double mse = se / static_cast<double>(da.size());
    if (mse <= 0.0) return 100.0;
    return std::min(100.0, 10.0 * std::log10(1.0 / mse));
}

QualityReport quality(const Image& a, const Image& b) {
    return {ssim(a, b), psnr(a, b)};
}

} // namespace sinoforge::metrics
