#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "streetlink/coverage.hpp"
#include "streetlink/errors.hpp"
#include "streetlink/link_metrics.hpp"
#include "streetlink/vlc_channel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace streetlink;
using doctest::Approx;

namespace {

Scenario one_pole() {
    Scenario sc;
    sc.street.pole_count = 1;
    sc.street.pole_spacing_m = 50.0;
    return sc;
}

} // namespace

TEST_CASE("metric names round-trip") {
    for (Metric m : all_metrics())
        CHECK(metric_from_name(metric_name(m)) == m);
    CHECK_THROWS_AS(metric_from_name("bogus"), ConfigError);
    CHECK(metric_is_outage(Metric::OutageGs));
    CHECK(!metric_is_outage(Metric::SicGs));
    CHECK(metric_is_db(Metric::SinrVlc));
    CHECK(!metric_is_db(Metric::Lighting));
    CHECK(!metric_is_db(Metric::OutagePsc));
}

TEST_CASE("level bands") {
    CHECK(level_for(Metric::Lighting, 3e-8) == 0);
    CHECK(level_for(Metric::Lighting, 5e-8) == 1);
    CHECK(level_for(Metric::Lighting, 1e-7) == 2);
    CHECK(level_for(Metric::Lighting, 6.5e-7) == 3);
    CHECK(level_for(Metric::Lighting, 2e-6) == 4);

    CHECK(level_for(Metric::SinrVlc, -std::numeric_limits<double>::infinity()) == 0);
    CHECK(level_for(Metric::SinrVlc, -1.0) == 1);
    CHECK(level_for(Metric::SinrVlc, 0.0) == 1);
    CHECK(level_for(Metric::SinrVlc, 1.0) == 2);
    CHECK(level_for(Metric::SinrVlc, 5.0) == 3);
    CHECK(level_for(Metric::SinrVlc, 10.0) == 4);

    CHECK(level_for(Metric::OutageGs, 1.0) == 0);
    CHECK(level_for(Metric::OutageGs, 5e-3) == 1);
    CHECK(level_for(Metric::OutageGs, 5e-4) == 2);
    CHECK(level_for(Metric::OutageGs, 1e-6) == 3);
    CHECK(level_for(Metric::OutageGs, 1e-7) == 4);
    CHECK(level_for(Metric::OutageGs, 0.0) == 4);
}

TEST_CASE("layout places fixtures on both rows") {
    Scenario sc = one_pole();
    RadioLayout lo = build_layout(sc.vlc.mount, sc);

    REQUIRE(lo.serving.size() == 2);
    CHECK(lo.serving_poles == 1);
    for (const FixtureSite& f : lo.serving) {
        CHECK(f.pos.x == Approx(1.15));
        CHECK(f.pos.y == Approx(50.0));
        CHECK(f.pos.z == Approx(10.0));
        CHECK(f.row_sign == 1);
        CHECK(f.pole == 0);
    }
    CHECK(lo.serving[0].side == -1);
    CHECK(lo.serving[1].side == +1);

    // opposite row is phase shifted by 15 m and mirrored at x = 20 - 1.15
    REQUIRE(lo.opposite.size() == 4);
    CHECK(lo.opposite[0].pos.y == Approx(15.0));
    CHECK(lo.opposite[2].pos.y == Approx(65.0));
    for (const FixtureSite& f : lo.opposite) {
        CHECK(f.pos.x == Approx(18.85));
        CHECK(f.row_sign == -1);
    }
}

TEST_CASE("layout applies per-side arm offsets") {
    Scenario sc = one_pole();
    sc.vlc.mount.rod_angle_deg = {90.0, 90.0};
    sc.vlc.mount.fixture_rod_angle_deg = {90.0, 90.0};
    RadioLayout lo = build_layout(sc.vlc.mount, sc);

    REQUIRE(lo.serving.size() == 2);
    CHECK(lo.serving[0].pos.x == Approx(0.15));
    CHECK(lo.serving[0].pos.y == Approx(49.0)); // side -1 walks up-street
    CHECK(lo.serving[1].pos.y == Approx(51.0));
}

TEST_CASE("point metrics match an independently composed model") {
    Scenario sc = one_pole();
    PointEvaluator eval(sc);
    PointMetrics pm = eval.evaluate(2.0, 50.0);

    CHECK(pm.admissible);
    CHECK(pm.vlc_serving_w == Approx(2.902523097807427e-04).epsilon(1e-9));
    CHECK(pm.vlc_interference_w == Approx(6.188415880843235e-08).epsilon(1e-9));
    CHECK(pm.thz_serving_w == Approx(0.11934646211047752).epsilon(1e-9));
    CHECK(pm.thz_interference_w == Approx(1.8633522380414573e-14).epsilon(1e-9));
    CHECK(pm.snr_vlc_db == Approx(35.52920677900158).epsilon(1e-9));
    CHECK(pm.sinr_vlc_db == Approx(35.52849501197045).epsilon(1e-9));
    CHECK(pm.snr_thz_db == Approx(36.45445785210844).epsilon(1e-9));
    CHECK(pm.sinr_thz_db == Approx(36.45445784911124).epsilon(1e-9));
    CHECK(pm.sic_gs_db == Approx(35.52849501197045).epsilon(1e-9));
    CHECK(pm.sic_psc_db == Approx(36.45445784911124).epsilon(1e-9));
    CHECK(pm.outage_vlc == 0.0);
    CHECK(pm.outage_thz == 0.0);
    CHECK(pm.outage_psc == 0.0);
    CHECK(pm.lighting_w == Approx(3.993570722499017e-05).epsilon(1e-9));

    PointMetrics under = eval.evaluate(1.15, 50.0);
    CHECK(under.lighting_w == Approx(4.0941627025679384e-05).epsilon(1e-9));
}

TEST_CASE("evaluator equals explicit per-pair sums with angled arms") {
    Scenario sc = one_pole();
    sc.vlc.mount.rod_angle_deg = {90.0, 90.0};
    sc.vlc.mount.fixture_rod_angle_deg = {90.0, 90.0};
    sc.thz.mount.rod_angle_deg = {90.0, 90.0};
    sc.thz.mount.fixture_rod_angle_deg = {90.0, 90.0};

    const double x = 3.0, y = 47.0;
    const Vec3 dets[2] = {{x - 0.75, y + 0.75, 1.5}, {x - 0.75, y - 0.75, 1.5}};
    const Mount rx_mounts[2] = {receiver_mount_for_side(sc.vlc.receiver, -1),
                                receiver_mount_for_side(sc.vlc.receiver, +1)};

    VlcLink vl;
    vl.detector_area_m2 = sc.vlc.receiver.detector_area_m2;
    vl.attenuation_per_km = vlc_attenuation_per_km(sc.env.visibility_km, sc.vlc.wavelength_nm);
    ThzLink tl;
    tl.absorption_per_m = [&] {
        double rho = water_vapor_mixing_ratio(sc.env.relative_humidity_pct, sc.env.temperature_c,
                                              sc.env.pressure_hpa);
        return molecular_absorption_per_m(sc.thz.carrier_hz, rho);
    }();
    tl.tx_array.element_spacing_m = sc.thz_element_spacing_m();
    tl.rx_array.element_spacing_m = tl.tx_array.element_spacing_m;

    double vlc_serv = 0.0, vlc_intf = 0.0, thz_serv = 0.0;
    auto add = [&](const Vec3& fpos, int side, int row_sign) {
        for (int di = 0; di < 2; ++di) {
            LinkPath p = link_path(fpos, dets[di], mount_for_side(sc.vlc.mount, side),
                                   rx_mounts[di], row_sign);
            double pw = vlc_pair_power_w(p, vl);
            (row_sign > 0 ? vlc_serv : vlc_intf) += pw;
            if (row_sign > 0)
                thz_serv += thz_pair_power_w(p, tl);
        }
    };
    add({0.15, 49.0, 10.0}, -1, 1);
    add({0.15, 51.0, 10.0}, +1, 1);
    add({19.85, 14.0, 10.0}, -1, -1);
    add({19.85, 16.0, 10.0}, +1, -1);
    add({19.85, 64.0, 10.0}, -1, -1);
    add({19.85, 66.0, 10.0}, +1, -1);

    PointEvaluator eval(sc);
    PointMetrics pm = eval.evaluate(x, y);
    CHECK(pm.vlc_serving_w == Approx(vlc_serv).epsilon(1e-12));
    CHECK(pm.vlc_interference_w == Approx(vlc_intf).epsilon(1e-12));
    CHECK(pm.thz_serving_w == Approx(thz_serv).epsilon(1e-12));
}

TEST_CASE("points outside the lane band carry no radio service") {
    Scenario sc = one_pole();
    PointEvaluator eval(sc);
    PointMetrics pm = eval.evaluate(0.5, 50.0);

    CHECK(!pm.admissible);
    CHECK(std::isinf(pm.snr_vlc_db));
    CHECK(pm.snr_vlc_db < 0);
    CHECK(std::isinf(pm.sic_psc_db));
    CHECK(pm.outage_vlc == 1.0);
    CHECK(pm.outage_gs == 1.0);
    CHECK(pm.lighting_w > 0.0); // the street is still lit
}

TEST_CASE("serving rule sum dominates max and leaves the array branch alone") {
    Scenario sc; // three poles
    sc.street.serving_rule = "max";
    PointEvaluator max_eval(sc);
    sc.street.serving_rule = "sum";
    PointEvaluator sum_eval(sc);

    for (double y : {10.0, 45.0, 60.0, 100.0}) {
        PointMetrics a = max_eval.evaluate(5.0, y);
        PointMetrics b = sum_eval.evaluate(5.0, y);
        CHECK(b.vlc_serving_w >= a.vlc_serving_w);
        // the array branch always locks onto its best pole
        CHECK(b.thz_serving_w == Approx(a.thz_serving_w).epsilon(1e-12));
        CHECK(b.vlc_interference_w == Approx(a.vlc_interference_w).epsilon(1e-12));
    }
}

TEST_CASE("receiver beam tracking never loses power") {
    Scenario sc = one_pole();
    PointEvaluator fixed(sc);
    sc.thz.beam_tracking = "rx";
    PointEvaluator rx(sc);
    sc.thz.beam_tracking = "both";
    PointEvaluator both(sc);

    PointMetrics f = fixed.evaluate(2.0, 50.0);
    PointMetrics r = rx.evaluate(2.0, 50.0);
    PointMetrics b = both.evaluate(2.0, 50.0);
    CHECK(r.thz_serving_w > f.thz_serving_w);
    CHECK(b.thz_serving_w > r.thz_serving_w);

    // off the steered axis the win is much larger
    PointMetrics f2 = fixed.evaluate(8.0, 20.0);
    PointMetrics r2 = rx.evaluate(8.0, 20.0);
    CHECK(r2.thz_serving_w > f2.thz_serving_w);
}

TEST_CASE("grid shape and cell centers") {
    Scenario sc = one_pole();
    GridMap map = compute_map(sc, Metric::Lighting);
    CHECK(map.nx == 40);
    CHECK(map.ny == 400);
    CHECK(map.x_at(0) == Approx(0.125));
    CHECK(map.y_at(399) == Approx(99.875));
    CHECK(map.values.size() == 16000);
    CHECK(map.levels.size() == 16000);
}

TEST_CASE("evaluation window shifts the grid without changing values") {
    Scenario sc = one_pole();
    sc.coverage.grid_res_m = 1.0;
    GridMap full = compute_map(sc, Metric::Lighting);

    sc.coverage.y_min_m = 25.0;
    sc.coverage.y_max_m = 75.0;
    sc.coverage.x_min_m = 1.0;
    sc.coverage.x_max_m = 9.0;
    GridMap win = compute_map(sc, Metric::Lighting);
    CHECK(win.nx == 8);
    CHECK(win.ny == 50);
    CHECK(win.x_at(0) == Approx(1.5));
    CHECK(win.y_at(0) == Approx(25.5));
    // same physical cell, same result
    CHECK(win.value_at(0, 0) == full.value_at(1, 25));
    CHECK(win.value_at(7, 49) == full.value_at(8, 74));

    // every windowed lighting cell sits inside the band, so both
    // denominators count the same set
    CoverageStats st = coverage_stats(win, sc);
    CHECK(st.cells_total == 400);
}

TEST_CASE("maps are identical across thread counts") {
    Scenario sc = one_pole();
    sc.coverage.grid_res_m = 1.0;
    auto serial = compute_maps(sc, {Metric::SinrVlc, Metric::OutageGs}, 1);
    auto parallel = compute_maps(sc, {Metric::SinrVlc, Metric::OutageGs}, 4);
    REQUIRE(serial.size() == 2);
    REQUIRE(parallel.size() == 2);
    for (size_t mi = 0; mi < serial.size(); ++mi) {
        CHECK(serial[mi].values == parallel[mi].values);
        CHECK(serial[mi].levels == parallel[mi].levels);
    }
}

TEST_CASE("combining never falls below switching on a map") {
    Scenario sc = one_pole();
    sc.coverage.grid_res_m = 2.0;
    auto maps = compute_maps(sc, {Metric::SicGs, Metric::SicPsc, Metric::OutageGs,
                                  Metric::OutagePsc});
    const GridMap& gs = maps[0];
    const GridMap& psc = maps[1];
    const GridMap& op_gs = maps[2];
    const GridMap& op_psc = maps[3];
    for (size_t i = 0; i < gs.values.size(); ++i) {
        CHECK(psc.values[i] >= gs.values[i]);
        CHECK(op_gs.values[i] >= 0.0);
        CHECK(op_gs.values[i] <= 1.0);
        CHECK(op_psc.values[i] >= 0.0);
        CHECK(op_psc.values[i] <= 1.0);
    }
}

TEST_CASE("coverage stats count thresholds per denominator") {
    Scenario sc = one_pole();
    GridMap map;
    map.metric = Metric::SinrVlc;
    map.nx = 4;
    map.ny = 1;
    map.res_m = 2.5; // centers at 1.25, 3.75, 6.25, 8.75
    map.values = {-5.0, 2.0, 5.0, 20.0};
    map.levels = {0, 2, 3, 4};

    CoverageStats st = coverage_stats(map, sc);
    CHECK(st.threshold == 5.0);
    CHECK(st.covered_above);
    CHECK(st.cells_total == 4);
    CHECK(st.cells_covered == 2);
    CHECK(st.percent == Approx(50.0));

    sc.coverage.denominator = "admissible";
    sc.street.admissible_band_m = {2.0, 9.0};
    CoverageStats banded = coverage_stats(map, sc);
    CHECK(banded.cells_total == 3);
    CHECK(banded.cells_covered == 2);
    CHECK(banded.percent == Approx(100.0 * 2 / 3));

    map.metric = Metric::Lighting;
    map.values = {1e-6, 3e-6, 2e-6, 5e-8};
    CoverageStats light = coverage_stats(map, sc);
    CHECK(light.threshold == 2e-6);
    CHECK(light.denominator == "full"); // illumination spans the whole lane
    CHECK(light.cells_total == 4);
    CHECK(light.cells_covered == 2);

    map.metric = Metric::OutageGs;
    map.values = {1e-7, 1e-3, 2e-2, 0.5};
    sc.coverage.denominator = "full";
    CoverageStats op = coverage_stats(map, sc);
    CHECK(op.threshold == 1e-6);
    CHECK(!op.covered_above);
    CHECK(op.cells_total == 4);
    CHECK(op.cells_covered == 1);
}

TEST_CASE("csv writer emits one row per cell") {
    GridMap map;
    map.metric = Metric::SinrVlc;
    map.nx = 2;
    map.ny = 2;
    map.res_m = 0.5;
    map.values = {1.5, -2.25, 0.0, 12.0};
    map.levels = {2, 0, 1, 4};

    const std::string path = "/tmp/streetlink_test_map.csv";
    write_map_csv(map, path);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "x_m,y_m,value,level");
    std::getline(in, line);
    CHECK(line == "0.25,0.25,1.5,2");
    std::getline(in, line);
    CHECK(line == "0.75,0.25,-2.25,0");
    std::getline(in, line);
    CHECK(line == "0.25,0.75,0,1");
    std::getline(in, line);
    CHECK(line == "0.75,0.75,12,4");
    CHECK(!std::getline(in, line));
    std::remove(path.c_str());
}

TEST_CASE("map computation validates the scenario first") {
    Scenario sc = one_pole();
    sc.street.pole_count = 0;
    CHECK_THROWS_AS(compute_map(sc, Metric::Lighting), ConfigError);
}
