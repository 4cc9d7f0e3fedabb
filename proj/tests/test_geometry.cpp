#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "streetlink/errors.hpp"
#include "streetlink/geometry.hpp"

#include <cmath>
#include <random>

using namespace streetlink;

namespace {
constexpr double kPi = 3.14159265358979323846;
double deg(double d) { return d * kPi / 180.0; }
} // namespace

TEST_CASE("fixture offset, straight rod") {
    // rod along the lateral axis, fixture diagonal aligned with the rod
    auto o = fixture_offset(0.0, 0.0, 0.3, 1.0);
    CHECK(o.lateral_m == doctest::Approx(1.15).epsilon(1e-12));
    CHECK(o.longitudinal_m == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fixture offset, rod turned along the street") {
    auto o = fixture_offset(deg(90.0), deg(90.0), 0.3, 1.0);
    CHECK(o.lateral_m == doctest::Approx(0.15).epsilon(1e-9));
    CHECK(o.longitudinal_m == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("fixture offset, fixture swung off a straight rod") {
    auto o = fixture_offset(0.0, deg(79.0), 0.3, 1.0);
    CHECK(o.lateral_m == doctest::Approx(1.0286214).epsilon(1e-6));
    CHECK(o.longitudinal_m == doctest::Approx(-0.1472441).epsilon(1e-6));
}

TEST_CASE("rotation matrices are orthonormal") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int it = 0; it < 200; ++it) {
        for (const Mat3& r : {rotation_about_x(ang(rng)), rotation_about_y(ang(rng))}) {
            Mat3 should_be_identity = r * r.transposed();
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    CHECK(should_be_identity.m[i][j] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("closed-form mount transform equals the rotation composition") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ang(-kPi / 2, kPi / 2);
    std::uniform_real_distribution<double> coord(-20.0, 20.0);
    for (int it = 0; it < 1000; ++it) {
        Mount m{ang(rng), ang(rng), (it % 2 == 0) ? -1 : 1};
        Vec3 v{coord(rng), coord(rng), coord(rng)};
        Vec3 closed = to_mount_frame(v, m);
        Vec3 composed = frame_of(m) * v;
        CHECK(closed.x == doctest::Approx(composed.x).epsilon(1e-12));
        CHECK(closed.y == doctest::Approx(composed.y).epsilon(1e-12));
        CHECK(closed.z == doctest::Approx(composed.z).epsilon(1e-12));
        CHECK(norm(closed) == doctest::Approx(norm(v)).epsilon(1e-12));
    }
}

TEST_CASE("boresight displacement has zero polar angle") {
    Direction d = mount_direction({0.0, 0.0, 8.5}, Mount{0.0, 0.0, -1});
    CHECK(d.polar_rad < 1e-7); // acos loses precision right at the axis
}

TEST_CASE("tilt turns the boresight toward the street interior") {
    // a point 45 degrees into the street sits on the boresight of a mount
    // tilted by 45 degrees
    Direction d = mount_direction({1.0, 0.0, 1.0}, Mount{deg(45.0), 0.0, -1});
    CHECK(d.polar_rad < 1e-7);
}

TEST_CASE("side rotation spreads the pair along the street") {
    // the up-street unit (side -1) with positive roll favors displacements
    // toward larger y, i.e. toward the vehicle ahead of the pole
    Mount up_street{0.0, deg(30.0), -1};
    Direction toward_ahead = mount_direction({0.0, -1.0, 0.0}, up_street);
    Direction toward_behind = mount_direction({0.0, 1.0, 0.0}, up_street);
    CHECK(toward_ahead.polar_rad == doctest::Approx(deg(60.0)).epsilon(1e-12));
    CHECK(toward_behind.polar_rad == doctest::Approx(deg(120.0)).epsilon(1e-12));
}

TEST_CASE("azimuth uses the full-plane arctangent") {
    Direction d = mount_direction({1.0, 1.0, std::sqrt(2.0)}, Mount{0.0, 0.0, 1});
    CHECK(d.azimuth_rad == doctest::Approx(kPi / 4).epsilon(1e-12));
    Direction q = mount_direction({-1.0, -1.0, std::sqrt(2.0)}, Mount{0.0, 0.0, 1});
    CHECK(q.azimuth_rad == doctest::Approx(-3 * kPi / 4).epsilon(1e-12));
}

TEST_CASE("link path distance and symmetric polar angles under plain mounts") {
    Vec3 fixture{1.15, 30.0, 10.0};
    Vec3 detector{2.0, 25.0, 1.5};
    LinkPath p = link_path(fixture, detector, Mount{0, 0, -1}, Mount{0, 0, -1}, 1);
    const double want = std::sqrt(0.85 * 0.85 + 5.0 * 5.0 + 8.5 * 8.5);
    CHECK(p.distance_m == doctest::Approx(want).epsilon(1e-12));
    // with no tilt or roll both sides measure the same angle off vertical
    CHECK(p.tx.polar_rad == doctest::Approx(std::acos(8.5 / want)).epsilon(1e-12));
    CHECK(p.rx.polar_rad == doctest::Approx(p.tx.polar_rad).epsilon(1e-12));
}

TEST_CASE("mirrored row flips the transmitter's lateral view only") {
    Vec3 fixture{18.85, 30.0, 10.0};
    Vec3 detector{2.0, 25.0, 1.5};
    Mount tilted{deg(12.0), 0.0, -1};
    LinkPath mirrored = link_path(fixture, detector, tilted, tilted, -1);
    LinkPath plain = link_path(fixture, detector, tilted, tilted, 1);
    CHECK(mirrored.distance_m == doctest::Approx(plain.distance_m).epsilon(1e-12));
    CHECK(mirrored.rx.polar_rad == doctest::Approx(plain.rx.polar_rad).epsilon(1e-12));
    // the mirrored transmitter tilts toward the vehicle, the plain one away
    CHECK(mirrored.tx.polar_rad < plain.tx.polar_rad);
    Vec3 v_manual{-(detector.x - fixture.x), fixture.y - detector.y, fixture.z - detector.z};
    CHECK(mirrored.tx.polar_rad ==
          doctest::Approx(mount_direction(v_manual, tilted).polar_rad).epsilon(1e-12));
}

TEST_CASE("coincident endpoints are rejected") {
    Vec3 p{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(link_path(p, p, Mount{}, Mount{}, 1), DegenerateLink);
    CHECK_THROWS_AS(mount_direction({0, 0, 0}, Mount{}), DegenerateLink);
}

TEST_CASE("pole rows span the street") {
    CHECK(street_length_m(3, 30.0) == doctest::Approx(120.0));
    auto serving = serving_pole_positions_m(3, 30.0);
    REQUIRE(serving.size() == 3);
    CHECK(serving[0] == doctest::Approx(30.0));
    CHECK(serving[2] == doctest::Approx(90.0));

    auto opposite = opposite_pole_positions_m(3, 30.0, 15.0);
    REQUIRE(opposite.size() == 4);
    CHECK(opposite.front() == doctest::Approx(15.0));
    CHECK(opposite.back() == doctest::Approx(105.0));

    // a phase equal to the spacing drops the pole that would sit at the end
    auto aligned = opposite_pole_positions_m(3, 30.0, 30.0);
    REQUIRE(aligned.size() == 3);
    CHECK(aligned.back() == doctest::Approx(90.0));
}
