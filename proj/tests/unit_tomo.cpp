#include <cmath>
#include <vector>

#include "doctest.h"
#include "sinoforge/metrics/quality.hpp"
#include "sinoforge/tomo/masks.hpp"
#include "sinoforge/tomo/phantom.hpp"
#include "sinoforge/tomo/scan.hpp"
#include "support/oracles.hpp"

using namespace sinoforge;

namespace {

/// Ten concentric +0.1 ellipses: a graded staircase whose soft edges keep
/// filtered back-projection ringing small.
tomo::Phantom staircase_phantom(int size) {
    tomo::Phantom ph{size, {}};
    for (int k = 0; k < 10; ++k) {
        const double s = 0.88 - 0.082 * k;
        ph.ellipses.push_back({0.0, 0.0, s, s * 0.94, 0.0, 0.1});
    }
    return ph;
}

tomo::Phantom structured_phantom(int size) {
    tomo::Phantom ph = staircase_phantom(size);
    ph.ellipses.push_back({-0.25, -0.25, 0.10, 0.14, 20.0, 0.08});
    ph.ellipses.push_back({0.28, -0.20, 0.12, 0.09, -30.0, 0.08});
    return ph;
}

int kept_rows(const Mask& mask) {
    int kept = 0;
    for (int r = 0; r < mask.height(); ++r) kept += mask.at(r, 0) ? 1 : 0;
    return kept;
}

} // namespace

TEST_CASE("rasterize places ellipse intensities") {
    tomo::Phantom disk{64, {{0.0, 0.0, 0.5, 0.5, 0.0, 1.0}}};
    const Image img = tomo::rasterize(disk);
    CHECK(img.at(32, 32) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(img.at(0, 0) == 0.0f);
    CHECK(img.at(0, 63) == 0.0f);

    tomo::Phantom overlap{64,
                          {{0.0, 0.0, 0.5, 0.5, 0.0, 0.6}, {0.0, 0.0, 0.3, 0.3, 0.0, 0.6}}};
    const Image sum = tomo::rasterize(overlap);
    CHECK(sum.at(32, 32) == doctest::Approx(1.0).epsilon(1e-6));  // 1.2 clamps
    CHECK(sum.max_value() <= 1.0f);
}

TEST_CASE("phantom json parsing") {
    const auto ph = tomo::Phantom::from_json_text(
        R"({"size": 32, "ellipses": [{"cx": 0.1, "value": 0.5}]})");
    CHECK(ph.size == 32);
    REQUIRE(ph.ellipses.size() == 1);
    CHECK(ph.ellipses[0].cx == doctest::Approx(0.1));
    CHECK(ph.ellipses[0].a == doctest::Approx(0.5));  // field default
    CHECK(ph.ellipses[0].value == doctest::Approx(0.5));

    CHECK_THROWS(tomo::Phantom::from_json_text(R"({"size": 32, "bogus": 1})"));
    CHECK_THROWS(tomo::Phantom::from_json_text(
        R"({"ellipses": [{"radius": 0.5}]})"));
    CHECK_THROWS(tomo::Phantom::from_json_text("not json"));
}

TEST_CASE("radon of an all-zero image is zero") {
    const Image zero(32, 32, 0.0f);
    const Image sino = tomo::radon(zero, {16, 32});
    CHECK(sino.height() == 16);
    CHECK(sino.width() == 32);
    for (float v : sino.data()) CHECK(v == 0.0f);

    CHECK_THROWS(tomo::radon(Image(16, 32), {16, 32}));  // non-square
}

TEST_CASE("radon of a centered disk is rotation invariant") {
    // Soft-rimmed disk (ten stacked rings) so the projection profile is
    // smooth; hard edges make bilinear sampling visibly angle-dependent.
    tomo::Phantom soft{128, {}};
    for (int k = 0; k < 10; ++k) {
        const double s = 0.50 - 0.01 * k;
        soft.ellipses.push_back({0.0, 0.0, s, s, 0.0, 0.1});
    }
    const Image sino = tomo::radon(tomo::rasterize(soft), {64, 128});

    std::vector<double> mean_row(128, 0.0);
    for (int r = 0; r < 64; ++r) {
        for (int c = 0; c < 128; ++c) mean_row[static_cast<std::size_t>(c)] += sino.at(r, c) / 64.0;
    }
    double mean_l1 = 0.0;
    for (double v : mean_row) mean_l1 += std::abs(v);
    double worst = 0.0;
    for (int r = 0; r < 64; ++r) {
        double l1 = 0.0;
        for (int c = 0; c < 128; ++c) l1 += std::abs(sino.at(r, c) - mean_row[static_cast<std::size_t>(c)]);
        worst = std::max(worst, l1 / mean_l1);
    }
    CHECK(worst <= 1e-3);
}

TEST_CASE("radon conserves projected mass per angle") {
    const Image img = tomo::rasterize(tomo::Phantom::standard_head(64));
    const Image sino = tomo::radon(img, {32, 64});
    const double mass = img.sum();
    for (int r = 0; r < sino.height(); ++r) {
        double row = 0.0;
        for (int c = 0; c < sino.width(); ++c) row += sino.at(r, c);
        CHECK(std::abs(row - mass) / mass <= 1e-2);
    }
}

TEST_CASE("radon is linear in the image") {
    const Image x = oracles::random_image(64, 64, 31);
    const Image y = oracles::random_image(64, 64, 32);
    Image combo(64, 64);
    for (std::size_t i = 0; i < combo.data().size(); ++i) {
        combo.data()[i] = 0.6f * x.data()[i] + 0.25f * y.data()[i];
    }
    const tomo::ScanGeometry geom{24, 64};
    const Image sx = tomo::radon(x, geom);
    const Image sy = tomo::radon(y, geom);
    const Image sc = tomo::radon(combo, geom);
    for (std::size_t i = 0; i < sc.data().size(); ++i) {
        // ray sums accumulate in float, so the error scales with magnitude
        const double want = 0.6 * sx.data()[i] + 0.25 * sy.data()[i];
        CHECK(std::abs(sc.data()[i] - want) <= 1e-5 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("fbp of an all-zero sinogram is zero") {
    const Image rec = tomo::fbp(Image(32, 64, 0.0f), {32, 64}, 64);
    for (float v : rec.data()) CHECK(v == 0.0f);
}

TEST_CASE("fbp round trip recovers the phantom") {
    const Image img = tomo::rasterize(staircase_phantom(128));
    const Image sino = tomo::radon(img, {180, 128});
    const Image rec = tomo::fbp(sino, {180, 128}, 128);
    CHECK(metrics::psnr(rec, img) >= 25.0);
}

TEST_CASE("fbp quality improves with angle count") {
    const Image img = tomo::rasterize(structured_phantom(128));
    double prev = -1.0;
    for (int angles : {30, 60, 180}) {
        const Image sino = tomo::radon(img, {angles, 128});
        const Image rec = tomo::fbp(sino, {angles, 128}, 128);
        const double p = metrics::psnr(rec, img);
        CHECK(p > prev);
        prev = p;
    }
}

TEST_CASE("fbp localizes a small disk") {
    tomo::Phantom small{128, {{0.25, -0.15, 0.05, 0.05, 0.0, 1.0}}};
    const Image img = tomo::rasterize(small);
    const Image rec = tomo::fbp(tomo::radon(img, {180, 128}), {180, 128}, 128);
    int br = 0;
    int bc = 0;
    float best = -1.0f;
    for (int r = 0; r < 128; ++r) {
        for (int c = 0; c < 128; ++c) {
            if (rec.at(r, c) > best) {
                best = rec.at(r, c);
                br = r;
                bc = c;
            }
        }
    }
    // Normalized center (x,y) = (0.25,-0.15) maps to pixel (row, col).
    const double cr = (-0.15 + 1.0) / 2.0 * 128 - 0.5;
    const double cc = (0.25 + 1.0) / 2.0 * 128 - 0.5;
    CHECK(std::hypot(br - cr, bc - cc) <= 2.0);
}

TEST_CASE("random angle masks remove the exact row count") {
    CHECK(kept_rows(tomo::random_angle_mask(10, 4, 0.0, 1)) == 10);
    CHECK(kept_rows(tomo::random_angle_mask(10, 4, 0.8, 1)) == 2);
    CHECK(kept_rows(tomo::random_angle_mask(180, 16, 0.6, 2)) == 72);
    CHECK(kept_rows(tomo::random_angle_mask(180, 16, 0.8, 2)) == 36);
    CHECK(tomo::removed_angle_count(10, 0.25) == 3);  // round-half-up on 2.5

    CHECK_THROWS(tomo::random_angle_mask(10, 4, 1.0, 1));
    CHECK_THROWS(tomo::random_angle_mask(10, 4, -0.1, 1));
}

TEST_CASE("random angle masks are row-structured and seeded") {
    const Mask a = tomo::random_angle_mask(32, 8, 0.5, 7);
    const Mask b = tomo::random_angle_mask(32, 8, 0.5, 7);
    const Mask c = tomo::random_angle_mask(32, 8, 0.5, 8);
    CHECK(a.bits() == b.bits());
    CHECK(a.bits() != c.bits());
    for (int r = 0; r < a.height(); ++r) {
        for (int col = 1; col < a.width(); ++col) CHECK(a.at(r, col) == a.at(r, 0));
    }
}

TEST_CASE("periodic angle masks keep every k-th row") {
    const Mask m = tomo::periodic_angle_mask(10, 4, 0.8);  // k = 5
    for (int r = 0; r < 10; ++r) {
        const std::uint8_t want = (r % 5 == 0) ? 1 : 0;
        CHECK(m.at(r, 0) == want);
    }

    const Mask half = tomo::periodic_angle_mask(8, 4, 0.5);  // k = 2
    for (int r = 0; r < 8; ++r) CHECK(half.at(r, 0) == (r % 2 == 0 ? 1 : 0));

    CHECK(kept_rows(tomo::periodic_angle_mask(6, 4, 0.0)) == 6);
}
