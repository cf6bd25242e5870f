#include <cmath>

#include "doctest.h"
#include "sinoforge/core/rng.hpp"
#include "sinoforge/metrics/quality.hpp"
#include "sinoforge/tomo/phantom.hpp"
#include "support/oracles.hpp"

using namespace sinoforge;

TEST_CASE("identical images score perfectly") {
    const Image img = oracles::random_image(32, 32, 1);
    CHECK(metrics::ssim(img, img) == 1.0);
    CHECK(metrics::psnr(img, img) == 100.0);
    const auto report = metrics::quality(img, img);
    CHECK(report.ssim == 1.0);
    CHECK(report.psnr == 100.0);
}

TEST_CASE("constant black vs constant white has the closed-form ssim") {
    const Image black(16, 16, 0.0f);
    const Image white(16, 16, 1.0f);
    // Every window sees means 0 and 1 with zero variances:
    // ssim = C1*C2 / ((1+C1)*C2) = C1/(1+C1) with C1 = 1e-4.
    const double want = 1e-4 / (1.0 + 1e-4);
    CHECK(metrics::ssim(black, white) == doctest::Approx(want).epsilon(1e-12));
    CHECK(metrics::psnr(black, white) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("a uniform 0.1 error is 20 dB") {
    const Image a(16, 16, 0.2f);
    const Image b(16, 16, 0.3f);
    CHECK(std::abs(metrics::psnr(a, b) - 20.0) <= 1e-5);
}

TEST_CASE("psnr matches the direct mean-squared-error formula") {
    const Image a = oracles::random_image(24, 24, 2);
    const Image b = oracles::random_image(24, 24, 3);
    double se = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        const double d = static_cast<double>(a.data()[i]) - b.data()[i];
        se += d * d;
    }
    const double want = 10.0 * std::log10(static_cast<double>(a.data().size()) / se);
    CHECK(metrics::psnr(a, b) == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("psnr caps at 100 dB for vanishing errors") {
    const Image a(16, 16, 0.5f);
    Image b = a;
    b.data()[0] += 1e-6f;
    CHECK(metrics::psnr(a, b) == 100.0);
}

TEST_CASE("both metrics are symmetric") {
    const Image a = oracles::random_image(20, 20, 4);
    const Image b = oracles::random_image(20, 20, 5);
    CHECK(metrics::ssim(a, b) == metrics::ssim(b, a));
    CHECK(metrics::psnr(a, b) == metrics::psnr(b, a));
}

TEST_CASE("scores fall as noise amplitude grows") {
    const Image gt = tomo::rasterize(tomo::Phantom::standard_head(64));
    Rng rng(6);
    const Image noise = gaussian_image(64, 64, rng);
    double prev_ssim = 2.0;
    double prev_psnr = 200.0;
    for (double amp : {0.02, 0.05, 0.10}) {
        Image noisy = gt;
        for (std::size_t i = 0; i < noisy.data().size(); ++i) {
            noisy.data()[i] += static_cast<float>(amp * noise.data()[i]);
        }
        const double s = metrics::ssim(gt, noisy);
        const double p = metrics::psnr(gt, noisy);
        CHECK(s < prev_ssim);
        CHECK(p < prev_psnr);
        prev_ssim = s;
        prev_psnr = p;
    }
}

TEST_CASE("metrics validate their inputs") {
    CHECK_THROWS(metrics::ssim(Image(16, 16), Image(16, 8)));
    CHECK_THROWS(metrics::psnr(Image(16, 16), Image(8, 16)));
    CHECK_THROWS(metrics::ssim(Image(8, 8), Image(8, 8)));  // below window size
}
