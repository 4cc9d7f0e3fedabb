#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "streetlink/link_metrics.hpp"

#include <cmath>
#include <random>

using namespace streetlink;

TEST_CASE("shot noise scales with total optical power") {
    NoiseConfig n;
    CHECK(shot_noise_a2(n, 0.35, 1e7, 1e-6, 0.29e-9) == doctest::Approx(1.120325e-18).epsilon(1e-6));
    // doubling both powers doubles the variance
    CHECK(shot_noise_a2(n, 0.35, 1e7, 2e-6, 0.58e-9) ==
          doctest::Approx(2.0 * 1.120325e-18).epsilon(1e-6));
}

TEST_CASE("thermal noise for two detector sizes") {
    NoiseConfig n;
    CHECK(thermal_noise_a2(n, 1e-4, 1e7) == doctest::Approx(4.2140758105192553e-16).epsilon(1e-9));
    CHECK(thermal_noise_a2(n, 1e-3, 1e7) == doctest::Approx(3.6246392791899474e-14).epsilon(1e-9));
}

TEST_CASE("decibel helpers") {
    CHECK(to_db(100.0) == doctest::Approx(20.0));
    CHECK(from_db(20.0) == doctest::Approx(100.0));
    CHECK(std::isinf(to_db(0.0)));
    CHECK(to_db(0.0) < 0);
    CHECK(from_db(to_db(3.7)) == doctest::Approx(3.7).epsilon(1e-12));
}

TEST_CASE("ratio definitions against direct arithmetic") {
    const double eta = 0.35, pc = 1e-6, var = 4.2252e-16;
    CHECK(vlc_snr(pc, eta, var) == doctest::Approx(eta * eta * pc * pc / var).epsilon(1e-12));
    const double pbs = 0.29e-9, pint = 2e-7;
    const double denom = var + eta * eta * (pbs + pint) * (pbs + pint);
    CHECK(vlc_sinr(pc, pint, pbs, eta, var) ==
          doctest::Approx(eta * eta * pc * pc / denom).epsilon(1e-12));
    CHECK(thz_snr(1e-3, 2.7e-5) == doctest::Approx(1e-3 / 2.7e-5).epsilon(1e-12));
    CHECK(thz_sinr(1e-3, 4e-4, 2.7e-5) == doctest::Approx(1e-3 / (2.7e-5 + 4e-4)).epsilon(1e-12));
    // interference can only hurt
    CHECK(vlc_sinr(pc, pint, pbs, eta, var) < vlc_snr(pc, eta, var));
    CHECK(thz_sinr(1e-3, 4e-4, 2.7e-5) < thz_snr(1e-3, 2.7e-5));
}

TEST_CASE("gaussian tail at tabulated points") {
    CHECK(gaussian_q(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(gaussian_q(1.0) == doctest::Approx(0.158655253931457).epsilon(1e-12));
    CHECK(gaussian_q(2.0) == doctest::Approx(0.0227501319481792).epsilon(1e-12));
    CHECK(gaussian_q(5.0) == doctest::Approx(2.866515718791939e-7).epsilon(1e-12));
    CHECK(gaussian_q(8.0) == doctest::Approx(6.22096057427178e-16).epsilon(1e-9));
    CHECK(gaussian_q(8.5) == 0.0);
    CHECK(gaussian_q(-8.5) == 1.0);
    // symmetry and the distribution complement
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> xs(-6.0, 6.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = xs(rng);
        CHECK(gaussian_q(x) + gaussian_q(-x) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(gaussian_cdf(x) == doctest::Approx(1.0 - gaussian_q(x)).epsilon(1e-12));
    }
}

TEST_CASE("single-link outage is half exactly at the requirement") {
    const double sigma = 1e-6;
    const double at_threshold = sigma * std::sqrt(from_db(5.0));
    CHECK(vlc_outage(at_threshold, 1.0, sigma, 5.0) == doctest::Approx(0.5).epsilon(1e-12));
    // doubling the power moves the margin to one threshold amplitude
    CHECK(vlc_outage(2.0 * at_threshold, 1.0, sigma, 5.0) ==
          doctest::Approx(gaussian_cdf(-std::sqrt(from_db(5.0)))).epsilon(1e-12));
    CHECK(vlc_outage(6.0 * at_threshold, 1.0, sigma, 5.0) < 1e-3);
    CHECK(vlc_outage(0.0, 1.0, sigma, 5.0) > 0.5);

    const double var = 2.7e-5;
    CHECK(thz_outage(var * from_db(5.0), var, 5.0) == doctest::Approx(0.5).epsilon(1e-12));
    // the margin is measured in noise amplitudes, so reliability needs
    // power several amplitudes above the threshold
    CHECK(thz_outage(var * from_db(5.0) + 6.0 * std::sqrt(var), var, 5.0) ==
          doctest::Approx(gaussian_q(6.0)).epsilon(1e-9));
    CHECK(thz_outage(0.1, var, 5.0) < 1e-12);
}

TEST_CASE("selection outage is the product of branch outages") {
    const double sigma = 1e-6, var = 2.7e-5;
    const double pv = 2.5e-6, pt = 1.1e-4;
    CHECK(psc_outage(pv, 1.0, sigma, pt, var, 5.0) ==
          doctest::Approx(vlc_outage(pv, 1.0, sigma, 5.0) * thz_outage(pt, var, 5.0)).epsilon(1e-12));
}

TEST_CASE("switching outage stays a probability and collapses without hysteresis") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> pw(0.0, 5e-6);
    std::uniform_real_distribution<double> pt(0.0, 5e-4);
    const double sigma = 1e-6, var = 2.7e-5;
    for (int i = 0; i < 100000; ++i) {
        const double pv = pw(rng), pth = pt(rng);
        const double op = gs_outage(pv, 1.0, sigma, pth, var, 1.0, 5.0);
        CHECK(op >= 0.0);
        CHECK(op <= 1.0);
        // the hysteresis terms only add failure mass over the common band
        CHECK(op >= psc_outage(pv, 1.0, sigma, pth, var, 1.0) - 1e-15);
    }
    for (int i = 0; i < 1000; ++i) {
        const double pv = pw(rng), pth = pt(rng);
        CHECK(gs_outage(pv, 1.0, sigma, pth, var, 5.0, 5.0) ==
              doctest::Approx(psc_outage(pv, 1.0, sigma, pth, var, 5.0)).epsilon(1e-12));
    }
}
