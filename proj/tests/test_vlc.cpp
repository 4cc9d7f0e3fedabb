#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "streetlink/constants.hpp"
#include "streetlink/vlc_channel.hpp"

#include <cmath>

using namespace streetlink;

TEST_CASE("scattering exponent branches") {
    CHECK(scattering_exponent(60.0) == doctest::Approx(1.6));
    CHECK(scattering_exponent(50.0) == doctest::Approx(1.3));   // 50 km sits on the haze branch
    CHECK(scattering_exponent(10.0) == doctest::Approx(1.3));
    CHECK(scattering_exponent(6.0) == doctest::Approx(1.3));    // continuous seam at 6 km
    CHECK(scattering_exponent(3.0) == doctest::Approx(0.82));
    CHECK(scattering_exponent(1.0) == doctest::Approx(0.5));    // continuous seam at 1 km
    CHECK(scattering_exponent(0.8) == doctest::Approx(0.3));
    CHECK(scattering_exponent(0.5) == doctest::Approx(0.0));    // continuous seam at 0.5 km
    CHECK(scattering_exponent(0.2) == doctest::Approx(0.0));
}

TEST_CASE("attenuation at reference wavelength") {
    CHECK(vlc_attenuation_per_km(50.0, 550.0) == doctest::Approx(0.07824).epsilon(1e-12));
    // at the reference wavelength the exponent is irrelevant
    CHECK(vlc_attenuation_per_km(0.5, 550.0) == doctest::Approx(3.912 / 0.5).epsilon(1e-12));
}

TEST_CASE("transmittance over a path") {
    CHECK(path_transmittance(0.07824, 50.0) == doctest::Approx(0.996096).epsilon(1e-6));
    CHECK(path_transmittance(0.0, 123.0) == doctest::Approx(1.0));
    // absorption composes multiplicatively over concatenated paths
    const double a = 2.7;
    CHECK(path_transmittance(a, 30.0 + 45.0) ==
          doctest::Approx(path_transmittance(a, 30.0) * path_transmittance(a, 45.0)).epsilon(1e-12));
}

TEST_CASE("received power directly under the fixture") {
    LinkPath p = link_path({0.0, 0.0, 10.0}, {0.0, 0.0, 1.5}, Mount{0, 0, -1}, Mount{0, 0, -1}, 1);
    VlcLink link;
    link.detector_area_m2 = 1e-4;
    CHECK(p.distance_m == doctest::Approx(8.5));
    CHECK(vlc_pair_power_w(p, link) == doctest::Approx(8.32672e-7).epsilon(1e-5));
}

TEST_CASE("received power off axis matches the direct formula") {
    LinkPath p = link_path({1.15, 30.0, 10.0}, {3.0, 26.0, 1.5}, Mount{0, 0, -1}, Mount{0, 0, 1}, 1);
    VlcLink link;
    link.detector_area_m2 = 1e-4;
    const double len = std::sqrt(1.85 * 1.85 + 4.0 * 4.0 + 8.5 * 8.5);
    const double cos_angle = 8.5 / len;
    const double want = 0.63 * 1e-4 * 6.0 * std::pow(cos_angle, 5.0) * cos_angle /
                        (2.0 * kPi * len * len);
    CHECK(p.distance_m == doctest::Approx(len).epsilon(1e-12));
    CHECK(vlc_pair_power_w(p, link) == doctest::Approx(want).epsilon(1e-12));
    CHECK(vlc_pair_power_w(p, link) == doctest::Approx(3.2126926902790625e-7).epsilon(1e-9));
}

TEST_CASE("power falls with the square of distance") {
    LinkPath near{10.0, {0.3, 0.1}, {0.4, -0.2}};
    LinkPath far{20.0, {0.3, 0.1}, {0.4, -0.2}};
    VlcLink link; // zero attenuation by default
    CHECK(vlc_pair_power_w(near, link) == doctest::Approx(4.0 * vlc_pair_power_w(far, link)).epsilon(1e-12));
}

TEST_CASE("field-of-view limits gate both ends") {
    VlcLink link;
    link.tx_fov_rad = 0.9;
    link.rx_fov_rad = 0.7;
    CHECK(vlc_pair_power_w({10.0, {0.901, 0.0}, {0.1, 0.0}}, link) == 0.0);
    CHECK(vlc_pair_power_w({10.0, {0.1, 0.0}, {0.701, 0.0}}, link) == 0.0);
    // the boundary itself is inside
    CHECK(vlc_pair_power_w({10.0, {0.9, 0.0}, {0.7, 0.0}}, link) > 0.0);
}

TEST_CASE("no emission behind the fixture plane") {
    VlcLink link;
    link.tx_fov_rad = kPi; // wide open, the cosine still gates
    link.rx_fov_rad = kPi;
    CHECK(vlc_pair_power_w({10.0, {1.8, 0.0}, {0.1, 0.0}}, link) == 0.0);
    CHECK(vlc_pair_power_w({10.0, {0.1, 0.0}, {1.8, 0.0}}, link) == 0.0);
}

TEST_CASE("flat incidence drops the receiver cosine only") {
    LinkPath p{12.0, {0.5, 0.0}, {0.8, 0.0}};
    VlcLink link;
    VlcLink flat = link;
    flat.flat_incidence = true;
    CHECK(vlc_pair_power_w(p, flat) ==
          doctest::Approx(vlc_pair_power_w(p, link) / std::cos(0.8)).epsilon(1e-12));
}
