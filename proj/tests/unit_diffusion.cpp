#include <cmath>

#include "doctest.h"
#include "sinoforge/core/rng.hpp"
#include "sinoforge/diffusion/sampler.hpp"
#include "support/oracles.hpp"

using namespace sinoforge;
using namespace sinoforge::diffusion;

namespace {

Mask random_pixel_mask(int h, int w, double keep, std::uint64_t seed) {
    Mask m(h, w, 1);
    Rng rng(seed);
    for (auto& bit : m.bits()) bit = rng.uniform01() < keep ? 1 : 0;
    return m;
}

} // namespace

TEST_CASE("schedule satisfies its invariants") {
    const auto sched = make_schedule(1000, 50, 1e-4, 0.02);
    REQUIRE(sched.alpha_bar.size() == 1001);
    CHECK(sched.alpha_bar[0] == 1.0);
    CHECK(sched.alpha_bar[1] == 1.0 - 1e-4);
    for (int t = 1; t <= 1000; ++t) {
        CHECK(sched.alpha_bar[static_cast<std::size_t>(t)] <
              sched.alpha_bar[static_cast<std::size_t>(t) - 1]);
    }
    CHECK(sched.alpha_bar[1000] > 0.0);

    // Independent product of the linearly spaced betas.
    double prod = 1.0;
    for (int t = 1; t <= 1000; ++t) {
        prod *= 1.0 - (1e-4 + (0.02 - 1e-4) * (t - 1) / 999.0);
        CHECK(sched.alpha_bar[static_cast<std::size_t>(t)] ==
              doctest::Approx(prod).epsilon(1e-12));
    }
}

TEST_CASE("schedule timestep list is round(T*k/N) descending to zero") {
    const auto sched = make_schedule(1000, 50, 1e-4, 0.02);
    REQUIRE(sched.num_steps() == 50);
    CHECK(sched.ddim_steps.front() == 980);
    CHECK(sched.ddim_steps[24] == 500);
    CHECK(sched.ddim_steps[48] == 20);
    CHECK(sched.ddim_steps.back() == 0);
    for (std::size_t i = 1; i < sched.ddim_steps.size(); ++i) {
        CHECK(sched.ddim_steps[i] < sched.ddim_steps[i - 1]);
    }

    const auto full = make_schedule(64, 64, 1e-4, 0.02);
    for (int i = 0; i < 64; ++i) CHECK(full.ddim_steps[static_cast<std::size_t>(i)] == 63 - i);

    const auto tiny = make_schedule(1, 1, 1e-4, 1e-4);
    CHECK(tiny.ddim_steps == std::vector<int>{0});
}

TEST_CASE("schedule rejects invalid parameters") {
    CHECK_THROWS(make_schedule(100, 0, 1e-4, 0.02));
    CHECK_THROWS(make_schedule(100, 101, 1e-4, 0.02));
    CHECK_THROWS(make_schedule(100, 10, 0.0, 0.02));
    CHECK_THROWS(make_schedule(100, 10, 0.03, 0.02));
    CHECK_THROWS(make_schedule(100, 10, 1e-4, 1.0));
}

TEST_CASE("ddim_step with equal noise levels is the identity") {
    const Image x = oracles::random_image(12, 9, 5);
    Rng rng(6);
    const Image eps = gaussian_image(12, 9, rng);
    for (double a : {0.9, 0.5, 0.05}) {
        const Image out = ddim_step(x, eps, a, a);
        CHECK(oracles::max_abs_diff(out, x) <= 1e-12);
    }
}

TEST_CASE("ddim_step with zero noise and a_prev=1 rescales by 1/sqrt(a_t)") {
    const Image x = oracles::random_image(8, 8, 7);
    const Image eps(8, 8, 0.0f);
    const double a_t = 0.37;
    const Image out = ddim_step(x, eps, a_t, 1.0);
    for (std::size_t i = 0; i < out.data().size(); ++i) {
        // The update runs in double per pixel, so the stored float is the
        // rounded quotient exactly.
        CHECK(out.data()[i] == static_cast<float>(x.data()[i] / std::sqrt(a_t)));
    }
    CHECK_THROWS(ddim_step(x, eps, 0.0, 1.0));
    CHECK_THROWS(ddim_step(x, eps, 0.5, 1.5));
    CHECK_THROWS(ddim_step(x, Image(4, 4), 0.5, 0.9));
}

TEST_CASE("one oracle ddim_step recovers the clean image") {
    const Image target = oracles::random_image(16, 16, 11);
    const OracleDenoiser den(target);
    Rng rng(12);
    const Image noise = gaussian_image(16, 16, rng);
    const double a = 0.42;
    Image x_t(16, 16);
    for (std::size_t i = 0; i < x_t.data().size(); ++i) {
        x_t.data()[i] = static_cast<float>(std::sqrt(a) * target.data()[i] +
                                           std::sqrt(1.0 - a) * noise.data()[i]);
    }
    const Image eps = den.predict_noise(x_t, a, FrameContext{});
    const Image out = ddim_step(x_t, eps, a, 1.0);  // a_prev=1 returns x0
    CHECK(oracles::max_abs_diff(out, target) <= 1e-6);
}

TEST_CASE("condition_on_known replaces exactly the masked pixels") {
    const Image x = oracles::random_image(10, 10, 21);
    const Image known = oracles::random_image(10, 10, 22);
    Rng rng(23);
    const Image noise = gaussian_image(10, 10, rng);
    const double a = 0.6;

    const Image all = condition_on_known(x, known, Mask::ones(10, 10), a, noise);
    for (std::size_t i = 0; i < all.data().size(); ++i) {
        const double want = std::sqrt(a) * known.data()[i] +
                            std::sqrt(1.0 - a) * noise.data()[i];
        CHECK(all.data()[i] == doctest::Approx(want).epsilon(1e-6));
    }

    const Image none = condition_on_known(x, known, Mask::zeros(10, 10), a, noise);
    CHECK(oracles::bit_equal(none, x));

    Mask half = Mask::zeros(10, 10);
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 10; ++c) half.at(r, c) = 1;
    }
    const Image mixed = condition_on_known(x, known, half, a, noise);
    for (int r = 0; r < 10; ++r) {
        for (int c = 0; c < 10; ++c) {
            if (r >= 5) CHECK(mixed.at(r, c) == x.at(r, c));
        }
    }

    // At noise level 1 the replacement is the known signal itself.
    const Image clean = condition_on_known(x, known, Mask::ones(10, 10), 1.0, noise);
    CHECK(oracles::bit_equal(clean, known));
}

TEST_CASE("oracle inference recovers the target at any step budget") {
    const Image target = oracles::random_image(24, 24, 31);
    const OracleDenoiser den(target);
    const auto sched = make_schedule(1000, 50, 1e-4, 0.02);
    const Mask mask = random_pixel_mask(24, 24, 0.3, 32);
    for (int steps : {10, 25, 50}) {
        for (StepMode mode : {StepMode::late_entry, StepMode::thinned}) {
            const Image out = ddim_infer(target, mask, den, sched, steps, 99, {}, mode);
            CHECK(oracles::max_abs_diff(out, target) <= 1e-4);
        }
    }
}

TEST_CASE("an all-ones mask pins the output to the known image") {
    const Image known = oracles::random_image(20, 20, 41);
    const BlurDenoiser den(2);
    const auto sched = make_schedule(200, 20, 1e-4, 0.02);
    const Image out = ddim_infer(known, Mask::ones(20, 20), den, sched, 20, 7);
    CHECK(oracles::bit_equal(out, known));
}

TEST_CASE("known pixels survive inference exactly") {
    const Image known = oracles::random_image(20, 20, 42);
    const Mask mask = random_pixel_mask(20, 20, 0.5, 43);
    const BlurDenoiser den(2);
    const auto sched = make_schedule(200, 20, 1e-4, 0.02);
    const Image out = ddim_infer(known, mask, den, sched, 12, 8);
    for (int r = 0; r < 20; ++r) {
        for (int c = 0; c < 20; ++c) {
            if (mask.at(r, c)) CHECK(out.at(r, c) == known.at(r, c));
        }
    }
}

TEST_CASE("the denoiser is evaluated exactly once per step") {
    const Image known = oracles::random_image(16, 16, 51);
    const Mask mask = random_pixel_mask(16, 16, 0.5, 52);
    const BlurDenoiser blur(2);
    CountingDenoiser counting(blur);
    const auto sched = make_schedule(400, 40, 1e-4, 0.02);
    for (int steps : {1, 7, 40}) {
        counting.reset();
        ddim_infer(known, mask, counting, sched, steps, 9);
        CHECK(counting.count() == static_cast<std::uint64_t>(steps));
        counting.reset();
        ddim_infer(known, mask, counting, sched, steps, 9, {}, StepMode::thinned);
        CHECK(counting.count() == static_cast<std::uint64_t>(steps));
    }
    CHECK_THROWS(ddim_infer(known, mask, blur, sched, 0, 9));
    CHECK_THROWS(ddim_infer(known, mask, blur, sched, 41, 9));
}

TEST_CASE("inference is a pure function of the seed") {
    const Image known = oracles::random_image(16, 16, 61);
    const Mask mask = random_pixel_mask(16, 16, 0.4, 62);
    const BlurDenoiser den(2);
    const auto sched = make_schedule(400, 40, 1e-4, 0.02);
    const Image a = ddim_infer(known, mask, den, sched, 10, 1234);
    const Image b = ddim_infer(known, mask, den, sched, 10, 1234);
    const Image c = ddim_infer(known, mask, den, sched, 10, 1235);
    CHECK(oracles::bit_equal(a, b));
    CHECK_FALSE(oracles::bit_equal(a, c));
}

TEST_CASE("late entry and thinned modes agree only on full-length runs") {
    const Image known = oracles::random_image(16, 16, 71);
    const Mask mask = random_pixel_mask(16, 16, 0.4, 72);
    const BlurDenoiser den(2);
    const auto sched = make_schedule(400, 40, 1e-4, 0.02);
    const Image full_late = ddim_infer(known, mask, den, sched, 40, 5, {}, StepMode::late_entry);
    const Image full_thin = ddim_infer(known, mask, den, sched, 40, 5, {}, StepMode::thinned);
    CHECK(oracles::bit_equal(full_late, full_thin));

    const Image part_late = ddim_infer(known, mask, den, sched, 12, 5, {}, StepMode::late_entry);
    const Image part_thin = ddim_infer(known, mask, den, sched, 12, 5, {}, StepMode::thinned);
    CHECK_FALSE(oracles::bit_equal(part_late, part_thin));
}

TEST_CASE("gaussian blur basics") {
    const Image img = oracles::random_image(12, 12, 81);
    CHECK(oracles::bit_equal(gaussian_blur(img, 0), img));
    const Image flat(9, 9, 0.5f);
    const Image blurred = gaussian_blur(flat, 3);
    for (float v : blurred.data()) CHECK(v == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(gaussian_blur(img, 2).data() != img.data());
}
