#include "sinoforge/tomo/scan.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sinoforge/core/fft.hpp"
#include "sinoforge/core/parallel.hpp"

namespace sinoforge::tomo {

namespace {

void check_geometry(const ScanGeometry& geom) {
    if (geom.angles < 2 || geom.detectors < 2) {
        throw std::invalid_argument("ScanGeometry: angles and detectors must be >= 2");
    }
}

double bilinear(const Image& img, double y, double x) {
    const int h = img.height();
    const int w = img.width();
    if (y <= -1.0 || x <= -1.0 || y >= static_cast<double>(h) || x >= static_cast<double>(w)) {
        return 0.0;
    }
    const int y0 = static_cast<int>(std::floor(y));
    const int x0 = static_cast<int>(std::floor(x));
    const double fy = y - y0;
    const double fx = x - x0;
    auto px = [&](int r, int c) -> double {
        if (r < 0 || r >= h || c < 0 || c >= w) return 0.0;
        return img.at(r, c);
    };
    const double top = px(y0, x0) * (1.0 - fx) + px(y0, x0 + 1) * fx;
    const double bot = px(y0 + 1, x0) * (1.0 - fx) + px(y0 + 1, x0 + 1) * fx;
    return top * (1.0 - fy) + bot * fy;
}

} // namespace

Image radon(const Image& img, const ScanGeometry& geom) {
    check_geometry(geom);
    if (img.height() != img.width()) throw std::invalid_argument("radon: image must be square");
    const int n = img.height();
    const int A = geom.angles;
    const int D = geom.detectors;
    const double center = (n - 1) / 2.0;
    Image sino(A, D);
    // 2x2 sub-rays per detector bin and half-pixel steps along each ray keep
    // the quadrature error of rotated sampling well under the stated
    // symmetry/mass tolerances.
    constexpr int kSubU = 2;
    constexpr int kSubV = 2;
    const double du = static_cast<double>(n) / D;
    parallel_for(0, A, [&](int i) {
        const double theta = static_cast<double>(i) * std::numbers::pi / A;
        const double ct = std::cos(theta);
        const double st = std::sin(theta);
        for (int d = 0; d < D; ++d) {
            double acc = 0.0;
            for (int su = 0; su < kSubU; ++su) {
                const double u = (d + (su + 0.5) / kSubU) * du - n / 2.0;
                for (int t = 0; t < n * kSubV; ++t) {
                    const double v = (t + 0.5) / kSubV - 0.5 - center;
                    const double x = center + u * ct - v * st;
                    const double y = center + u * st + v * ct;
                    acc += bilinear(img, y, x);
                }
            }
            sino.at(i, d) = static_cast<float>(acc / (kSubU * kSubV));
        }
    });
    return sino;
}

Image fbp(const Image& sino, const ScanGeometry& geom, int out_size) {
    check_geometry(geom);
    if (sino.height() != geom.angles || sino.width() != geom.detectors) {
        throw std::invalid_argument("fbp: sinogram shape does not match geometry");
    }
    if (out_size < 2) throw std::invalid_argument("fbp: output size must be >= 2");
    const int A = geom.angles;
    const int D = geom.detectors;
    const std::size_t m = next_power_of_two(static_cast<std::size_t>(2 * D));

    // Ramp kernel, wrapped for circular convolution on length m: with
    // m >= 2D the circular product reproduces the linear convolution on the
    // first D samples.
    std::vector<std::complex<double>> kernel(m, {0.0, 0.0});
    kernel[0] = {0.25, 0.0};
    for (int k = 1; k < D; ++k) {
        if (k % 2 == 1) {
            const double v = -1.0 / (std::numbers::pi * k * std::numbers::pi * k);
            kernel[static_cast<std::size_t>(k)] = {v, 0.0};
            kernel[m - static_cast<std::size_t>(k)] = {v, 0.0};
        }
    }
    fft_inplace(kernel, false);

    std::vector<std::vector<double>> filtered(static_cast<std::size_t>(A),
                                              std::vector<double>(static_cast<std::size_t>(D)));
    parallel_for(0, A, [&](int i) {
        std::vector<std::complex<double>> row(m, {0.0, 0.0});
        for (int d = 0; d < D; ++d) row[static_cast<std::size_t>(d)] = {sino.at(i, d), 0.0};
        fft_inplace(row, false);
        for (std::size_t k = 0; k < m; ++k) row[k] *= kernel[k];
        fft_inplace(row, true);
        for (int d = 0; d < D; ++d) filtered[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] =
            row[static_cast<std::size_t>(d)].real();
    });

    // Back-project: pixel (r,c) of the output maps onto the detector axis at
    // u = dx*cos + dy*sin in source-pixel units of the original n x n grid;
    // out_size rescales that grid.
    Image out(out_size, out_size);
    const double out_center = (out_size - 1) / 2.0;
    const double scale = static_cast<double>(D) / out_size;
    parallel_for(0, out_size, [&](int r) {
        std::vector<double> acc_row(static_cast<std::size_t>(out_size), 0.0);
        for (int i = 0; i < A; ++i) {
            const double theta = static_cast<double>(i) * std::numbers::pi / A;
            const double ct = std::cos(theta);
            const double st = std::sin(theta);
            const double dy = (r - out_center) * scale;
            for (int c = 0; c < out_size; ++c) {
                const double dx = (c - out_center) * scale;
                const double u = dx * ct + dy * st;
                const double dpos = u + D / 2.0 - 0.5;
                const int d0 = static_cast<int>(std::floor(dpos));
                const double fd = dpos - d0;
                double v = 0.0;
                if (d0 >= 0 && d0 < D) v += filtered[static_cast<std::size_t>(i)][static_cast<std::size_t>(d0)] * (1.0 - fd);
                if (d0 + 1 >= 0 && d0 + 1 < D) v += filtered[static_cast<std::size_t>(i)][static_cast<std::size_t>(d0 + 1)] * fd;
                acc_row[static_cast<std::size_t>(c)] += v;
            }
        }
        const double norm = std::numbers::pi / (2.0 * A);
        for (int c = 0; c < out_size; ++c) {
            out.at(r, c) = static_cast<float>(acc_row[static_cast<std::size_t>(c)] * norm);
        }
    });

    out.minmax_normalize();
    out.clamp01();
    return out;
}

} // namespace sinoforge::tomo
