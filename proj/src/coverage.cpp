#include "streetlink/coverage.hpp"

#include "streetlink/constants.hpp"
#include "streetlink/errors.hpp"
#include "streetlink/hybrid.hpp"
#include "streetlink/link_metrics.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

namespace streetlink {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

Metric metric_from_name(const std::string& name) {
    if (name == "LC") return Metric::Lighting;
    if (name == "SNR_V") return Metric::SnrVlc;
    if (name == "SINR_V") return Metric::SinrVlc;
    if (name == "SNR_T") return Metric::SnrThz;
    if (name == "SINR_T") return Metric::SinrThz;
    if (name == "SIC_GS") return Metric::SicGs;
    if (name == "SIC_PSC") return Metric::SicPsc;
    if (name == "OP_V") return Metric::OutageVlc;
    if (name == "OP_T") return Metric::OutageThz;
    if (name == "OP_GS") return Metric::OutageGs;
    if (name == "OP_PSC") return Metric::OutagePsc;
    throw ConfigError("unknown metric: " + name);
}

std::string metric_name(Metric m) {
    switch (m) {
    case Metric::Lighting: return "LC";
    case Metric::SnrVlc: return "SNR_V";
    case Metric::SinrVlc: return "SINR_V";
    case Metric::SnrThz: return "SNR_T";
    case Metric::SinrThz: return "SINR_T";
    case Metric::SicGs: return "SIC_GS";
    case Metric::SicPsc: return "SIC_PSC";
    case Metric::OutageVlc: return "OP_V";
    case Metric::OutageThz: return "OP_T";
    case Metric::OutageGs: return "OP_GS";
    case Metric::OutagePsc: return "OP_PSC";
    }
    return "?";
}

const std::vector<Metric>& all_metrics() {
    static const std::vector<Metric> all{
        Metric::Lighting, Metric::SnrVlc,    Metric::SinrVlc,  Metric::SnrThz,
        Metric::SinrThz,  Metric::SicGs,     Metric::SicPsc,   Metric::OutageVlc,
        Metric::OutageThz, Metric::OutageGs, Metric::OutagePsc};
    return all;
}

bool metric_is_outage(Metric m) {
    return m == Metric::OutageVlc || m == Metric::OutageThz || m == Metric::OutageGs ||
           m == Metric::OutagePsc;
}

bool metric_is_db(Metric m) {
    return !metric_is_outage(m) && m != Metric::Lighting;
}

int level_for(Metric m, double value) {
    if (m == Metric::Lighting) {
        static const double edges[4] = {4e-8, 1e-7, 6e-7, 2e-6};
        int level = 0;
        for (double e : edges)
            level += value >= e ? 1 : 0;
        return level;
    }
    if (metric_is_outage(m)) {
        static const double edges[4] = {1e-2, 1e-3, 1e-5, 1e-7};
        int level = 0;
        for (double e : edges)
            level += value <= e ? 1 : 0;
        return level;
    }
    static const double edges[4] = {-1.0, 1.0, 5.0, 10.0};
    int level = 0;
    for (double e : edges)
        level += value >= e ? 1 : 0;
    return level;
}

double metric_value(const PointMetrics& pm, Metric m) {
    switch (m) {
    case Metric::Lighting: return pm.lighting_w;
    case Metric::SnrVlc: return pm.snr_vlc_db;
    case Metric::SinrVlc: return pm.sinr_vlc_db;
    case Metric::SnrThz: return pm.snr_thz_db;
    case Metric::SinrThz: return pm.sinr_thz_db;
    case Metric::SicGs: return pm.sic_gs_db;
    case Metric::SicPsc: return pm.sic_psc_db;
    case Metric::OutageVlc: return pm.outage_vlc;
    case Metric::OutageThz: return pm.outage_thz;
    case Metric::OutageGs: return pm.outage_gs;
    case Metric::OutagePsc: return pm.outage_psc;
    }
    return 0.0;
}

RadioLayout build_layout(const MountConfig& mc, const Scenario& sc) {
    RadioLayout layout;
    const double deg = kPi / 180.0;
    const double row_x = sc.opposite_row_lateral_m();
    const double h = sc.street.pole_height_m;

    FixtureOffset off[2] = {
        fixture_offset(mc.rod_angle_deg[0] * deg, mc.fixture_rod_angle_deg[0] * deg,
                       mc.fixture_side_m, mc.rod_length_m),
        fixture_offset(mc.rod_angle_deg[1] * deg, mc.fixture_rod_angle_deg[1] * deg,
                       mc.fixture_side_m, mc.rod_length_m)};

    const auto serving = serving_pole_positions_m(sc.street.pole_count, sc.street.pole_spacing_m);
    layout.serving_poles = static_cast<int>(serving.size());
    for (size_t n = 0; n < serving.size(); ++n) {
        for (int side : {-1, +1}) {
            const FixtureOffset& o = off[side_index(side)];
            layout.serving.push_back(
                {{o.lateral_m, serving[n] + side * o.longitudinal_m, h}, side, 1, static_cast<int>(n)});
        }
    }
    const auto opposite = opposite_pole_positions_m(sc.street.pole_count, sc.street.pole_spacing_m,
                                                    sc.street.opposite_offset_m);
    for (size_t n = 0; n < opposite.size(); ++n) {
        for (int side : {-1, +1}) {
            const FixtureOffset& o = off[side_index(side)];
            layout.opposite.push_back(
                {{row_x - o.lateral_m, opposite[n] + side * o.longitudinal_m, h}, side, -1,
                 static_cast<int>(n)});
        }
    }
    return layout;
}

PointEvaluator::PointEvaluator(const Scenario& sc) : sc_(sc) {
    vlc_layout_ = build_layout(sc_.vlc.mount, sc_);
    thz_layout_ = build_layout(sc_.thz.mount, sc_);

    auto detectors = [&](const ReceiverConfig& rc) {
        std::vector<DetectorSpec> ds;
        ds.push_back({rc.offset_front_x_m, rc.offset_front_y_m, receiver_mount_for_side(rc, -1),
                      receiver_fov_rad(rc, -1), -1});
        ds.push_back({rc.offset_back_x_m, rc.offset_back_y_m, receiver_mount_for_side(rc, +1),
                      receiver_fov_rad(rc, +1), +1});
        return ds;
    };
    vlc_detectors_ = detectors(sc_.vlc.receiver);
    thz_detectors_ = detectors(sc_.thz.receiver);

    vlc_attenuation_per_km_ = vlc_attenuation_per_km(sc_.env.visibility_km, sc_.vlc.wavelength_nm);
    const double rho = water_vapor_mixing_ratio(sc_.env.relative_humidity_pct,
                                                sc_.env.temperature_c, sc_.env.pressure_hpa);
    thz_absorption_per_m_ = molecular_absorption_per_m(sc_.thz.carrier_hz, rho);
    thz_spacing_m_ = sc_.thz_element_spacing_m();
    thermal_noise_a2_ = thermal_noise_a2(sc_.noise, sc_.vlc.receiver.detector_area_m2,
                                         sc_.vlc.bandwidth_hz);
    surface_fov_rad_ = 0.5 * kPi;
}

double PointEvaluator::vlc_sum_w(const std::vector<FixtureSite>& fixtures, double x_m, double y_m,
                                 bool per_pole_max) const {
    VlcLink link;
    link.tx_power_w = sc_.vlc.tx_power_w;
    link.lambert_order = sc_.vlc.lambert_order;
    link.detector_area_m2 = sc_.vlc.receiver.detector_area_m2;
    link.filter_gain = sc_.vlc.filter_gain;
    link.concentrator_gain = sc_.vlc.concentrator_gain;
    link.attenuation_per_km = vlc_attenuation_per_km_;

    double best = 0.0, total = 0.0;
    double pole_sum = 0.0;
    int current_pole = -1;
    int current_row = 0;
    auto flush = [&] {
        best = std::max(best, pole_sum);
        total += pole_sum;
        pole_sum = 0.0;
    };
    for (const FixtureSite& f : fixtures) {
        if (f.pole != current_pole || f.row_sign != current_row) {
            flush();
            current_pole = f.pole;
            current_row = f.row_sign;
        }
        link.tx_fov_rad = mount_fov_rad(sc_.vlc.mount, f.side);
        const Mount tx = mount_for_side(sc_.vlc.mount, f.side);
        for (const DetectorSpec& d : vlc_detectors_) {
            const Vec3 det{x_m - d.dx_m, y_m - d.side * d.dy_m, sc_.street.vehicle_height_m};
            link.rx_fov_rad = d.fov_rad;
            const LinkPath path = link_path(f.pos, det, tx, d.mount, f.row_sign);
            pole_sum += vlc_pair_power_w(path, link);
        }
    }
    flush();
    return per_pole_max ? best : total;
}

std::pair<double, double> PointEvaluator::thz_row_w(const std::vector<FixtureSite>& fixtures,
                                                    double x_m, double y_m, bool lock_one) const {
    ThzLink link;
    link.tx_power_w = sc_.thz.tx_power_w;
    link.carrier_hz = sc_.thz.carrier_hz;
    link.absorption_per_m = thz_absorption_per_m_;
    link.symmetric_gains = sc_.thz.symmetric_gains;
    const double deg = kPi / 180.0;
    link.tx_array.elements = sc_.thz.tx_elements;
    link.tx_array.element_spacing_m = thz_spacing_m_;
    link.tx_array.steer_polar_rad = sc_.thz.steer_polar_deg * deg;
    link.tx_array.steer_azimuth_rad = sc_.thz.steer_azimuth_deg * deg;
    link.rx_array.elements = sc_.thz.rx_elements;
    link.rx_array.element_spacing_m = thz_spacing_m_;
    link.rx_array.steer_polar_rad = link.tx_array.steer_polar_rad;
    link.rx_array.steer_azimuth_rad = link.tx_array.steer_azimuth_rad;

    const bool track_rx = sc_.thz.beam_tracking == "rx" || sc_.thz.beam_tracking == "both";
    const bool track_tx = sc_.thz.beam_tracking == "tx" || sc_.thz.beam_tracking == "both";

    // with receiver tracking each detector aims at the strongest admissible
    // fixture of the serving row, for interference sums included
    Direction rx_steer[2];
    bool rx_tracked[2] = {false, false};
    if (track_rx) {
        for (size_t di = 0; di < thz_detectors_.size(); ++di) {
            const DetectorSpec& d = thz_detectors_[di];
            const Vec3 det{x_m - d.dx_m, y_m - d.side * d.dy_m, sc_.street.vehicle_height_m};
            double best_gain = -1.0;
            for (const FixtureSite& f : thz_layout_.serving) {
                const LinkPath path = link_path(f.pos, det, mount_for_side(sc_.thz.mount, f.side),
                                                d.mount, f.row_sign);
                if (path.tx.polar_rad > mount_fov_rad(sc_.thz.mount, f.side) ||
                    path.rx.polar_rad > d.fov_rad)
                    continue;
                const double g = thz_path_gain(link.carrier_hz, path.distance_m,
                                               link.absorption_per_m);
                if (g > best_gain) {
                    best_gain = g;
                    rx_steer[di] = path.rx;
                }
            }
            rx_tracked[di] = best_gain > 0.0;
        }
    }

    // per pole group: the power we would see beam-locked onto that pole, and
    // the ambient power it radiates our way while serving someone else
    std::vector<double> locked_w, ambient_w;
    double locked_sum = 0.0, ambient_sum = 0.0;
    int current_pole = -1;
    int current_row = 0;
    auto flush = [&] {
        if (current_pole >= 0) {
            locked_w.push_back(locked_sum);
            ambient_w.push_back(ambient_sum);
        }
        locked_sum = ambient_sum = 0.0;
    };
    for (const FixtureSite& f : fixtures) {
        if (f.pole != current_pole || f.row_sign != current_row) {
            flush();
            current_pole = f.pole;
            current_row = f.row_sign;
        }
        link.tx_fov_rad = mount_fov_rad(sc_.thz.mount, f.side);
        const Mount tx = mount_for_side(sc_.thz.mount, f.side);
        for (size_t di = 0; di < thz_detectors_.size(); ++di) {
            const DetectorSpec& d = thz_detectors_[di];
            const Vec3 det{x_m - d.dx_m, y_m - d.side * d.dy_m, sc_.street.vehicle_height_m};
            link.rx_fov_rad = d.fov_rad;
            const LinkPath path = link_path(f.pos, det, tx, d.mount, f.row_sign);

            ThzLink pair = link;
            if (rx_tracked[di]) {
                pair.rx_array.steer_polar_rad = rx_steer[di].polar_rad;
                pair.rx_array.steer_azimuth_rad = rx_steer[di].azimuth_rad;
            }
            const double ambient = thz_pair_power_w(path, pair);
            ambient_sum += ambient;
            // only a fixture serving this vehicle points its beam here;
            // everyone else keeps whatever steer its own user dictates
            if (track_tx && f.row_sign > 0) {
                pair.tx_array.steer_polar_rad = path.tx.polar_rad;
                pair.tx_array.steer_azimuth_rad = path.tx.azimuth_rad;
                locked_sum += thz_pair_power_w(path, pair);
            } else {
                locked_sum += ambient;
            }
        }
    }
    flush();

    double best = 0.0, ambient_rest = 0.0;
    size_t best_i = locked_w.size();
    if (lock_one)
        for (size_t i = 0; i < locked_w.size(); ++i)
            if (locked_w[i] > best) {
                best = locked_w[i];
                best_i = i;
            }
    for (size_t i = 0; i < ambient_w.size(); ++i)
        if (i != best_i)
            ambient_rest += ambient_w[i];
    return {best, ambient_rest};
}

double PointEvaluator::lighting_w(double x_m, double y_m) const {
    VlcLink link;
    link.tx_power_w = sc_.vlc.tx_power_w;
    link.lambert_order = sc_.vlc.lambert_order;
    link.detector_area_m2 = sc_.street.surface_receiver_area_m2;
    // a bare patch of road has no receiver optics
    link.filter_gain = 1.0;
    link.concentrator_gain = 1.0;
    link.attenuation_per_km = vlc_attenuation_per_km_;
    link.rx_fov_rad = surface_fov_rad_;
    link.flat_incidence = !sc_.street.surface_cosine_incidence;

    const Mount surface{0.0, 0.0, +1};
    const Vec3 det{x_m, y_m, 0.0};
    double total = 0.0;
    auto add_row = [&](const std::vector<FixtureSite>& fixtures) {
        for (const FixtureSite& f : fixtures) {
            link.tx_fov_rad = mount_fov_rad(sc_.vlc.mount, f.side);
            const LinkPath path =
                link_path(f.pos, det, mount_for_side(sc_.vlc.mount, f.side), surface, f.row_sign);
            total += vlc_pair_power_w(path, link);
        }
    };
    add_row(vlc_layout_.serving);
    if (sc_.street.lighting_includes_opposite_row)
        add_row(vlc_layout_.opposite);
    return total;
}

PointMetrics PointEvaluator::evaluate(double x_m, double y_m) const {
    PointMetrics pm;
    pm.lighting_w = lighting_w(x_m, y_m);
    pm.admissible = x_m >= sc_.street.admissible_band_m[0] &&
                    x_m <= sc_.street.admissible_band_m[1];

    if (!pm.admissible) {
        pm.snr_vlc_db = pm.sinr_vlc_db = kNegInf;
        pm.snr_thz_db = pm.sinr_thz_db = kNegInf;
        pm.sic_gs_db = pm.sic_psc_db = kNegInf;
        return pm;
    }

    // broadband light from co-broadcasting fixtures adds at the photodiode;
    // the array branch locks its beam onto one pole, so the rest of its own
    // row carries uncoordinated copies and lands in the interference budget
    const bool per_pole_max = sc_.street.serving_rule == "max";
    pm.vlc_serving_w = vlc_sum_w(vlc_layout_.serving, x_m, y_m, per_pole_max);
    pm.vlc_interference_w = vlc_sum_w(vlc_layout_.opposite, x_m, y_m, false);
    const auto [thz_best, thz_self_intf] = thz_row_w(thz_layout_.serving, x_m, y_m, true);
    pm.thz_serving_w = thz_best;
    pm.thz_interference_w = thz_self_intf + thz_row_w(thz_layout_.opposite, x_m, y_m, false).second;

    const double eta = sc_.vlc.oe_efficiency_a_per_w;
    const double shot = shot_noise_a2(sc_.noise, eta, sc_.vlc.bandwidth_hz, pm.vlc_serving_w,
                                      sc_.env.background_power_w);
    const double var_v = shot + thermal_noise_a2_;
    const double sigma_v = std::sqrt(var_v);
    const double var_t = sc_.thz.noise_variance_w;

    pm.snr_vlc_db = to_db(vlc_snr(pm.vlc_serving_w, eta, var_v));
    pm.sinr_vlc_db = to_db(vlc_sinr(pm.vlc_serving_w, pm.vlc_interference_w,
                                    sc_.env.background_power_w, eta, var_v));
    pm.snr_thz_db = to_db(thz_snr(pm.thz_serving_w, var_t));
    pm.sinr_thz_db = to_db(thz_sinr(pm.thz_serving_w, pm.thz_interference_w, var_t));

    pm.sic_gs_db = gs_static_db(pm.sinr_vlc_db, pm.sinr_thz_db, sc_.hybrid.switch_threshold_high_db);
    pm.sic_psc_db = psc_static_db(pm.sinr_vlc_db, pm.sinr_thz_db,
                                  sc_.hybrid.switch_threshold_high_db);

    const double th = sc_.coverage.snr_threshold_db;
    pm.outage_vlc = vlc_outage(pm.vlc_serving_w, eta, sigma_v, th);
    pm.outage_thz = thz_outage(pm.thz_serving_w, var_t, th);
    pm.outage_psc = psc_outage(pm.vlc_serving_w, eta, sigma_v, pm.thz_serving_w, var_t, th);
    pm.outage_gs = gs_outage(pm.vlc_serving_w, eta, sigma_v, pm.thz_serving_w, var_t,
                             sc_.hybrid.switch_threshold_low_db,
                             sc_.hybrid.switch_threshold_high_db);
    return pm;
}

std::vector<GridMap> compute_maps(const Scenario& sc, const std::vector<Metric>& metrics,
                                  int threads) {
    sc.validate();
    const double res = sc.coverage.grid_res_m;
    const Scenario::GridWindow win = sc.grid_window();
    const int nx = std::max(1, static_cast<int>(std::llround((win.x1 - win.x0) / res)));
    const int ny = std::max(1, static_cast<int>(std::llround((win.y1 - win.y0) / res)));

    std::vector<GridMap> maps(metrics.size());
    for (size_t mi = 0; mi < metrics.size(); ++mi) {
        maps[mi].metric = metrics[mi];
        maps[mi].nx = nx;
        maps[mi].ny = ny;
        maps[mi].res_m = res;
        maps[mi].x0_m = win.x0;
        maps[mi].y0_m = win.y0;
        maps[mi].values.assign(static_cast<size_t>(nx) * ny, 0.0);
        maps[mi].levels.assign(static_cast<size_t>(nx) * ny, 0);
    }

    const PointEvaluator eval(sc);
    int n_threads = threads;
    if (n_threads <= 0)
        n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min(n_threads, ny);

    auto sweep_rows = [&](int start) {
        for (int iy = start; iy < ny; iy += n_threads) {
            const double y = win.y0 + (iy + 0.5) * res;
            for (int ix = 0; ix < nx; ++ix) {
                const double x = win.x0 + (ix + 0.5) * res;
                const PointMetrics pm = eval.evaluate(x, y);
                const size_t idx = static_cast<size_t>(iy) * nx + ix;
                for (size_t mi = 0; mi < metrics.size(); ++mi) {
                    const double v = metric_value(pm, metrics[mi]);
                    maps[mi].values[idx] = v;
                    maps[mi].levels[idx] = level_for(metrics[mi], v);
                }
            }
        }
    };

    if (n_threads == 1) {
        sweep_rows(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(sweep_rows, t);
        for (auto& th : pool)
            th.join();
    }
    return maps;
}

GridMap compute_map(const Scenario& sc, Metric metric, int threads) {
    return std::move(compute_maps(sc, {metric}, threads)[0]);
}

CoverageStats coverage_stats(const GridMap& map, const Scenario& sc) {
    CoverageStats st;
    st.metric = map.metric;
    st.denominator = sc.coverage.denominator;
    if (map.metric == Metric::Lighting) {
        st.threshold = sc.coverage.lighting_threshold_w;
        st.denominator = "full"; // illumination is judged across the lane
    } else if (metric_is_outage(map.metric)) {
        st.threshold = sc.coverage.outage_threshold;
        st.covered_above = false;
    } else {
        st.threshold = sc.coverage.snr_threshold_db;
    }

    const bool band_only = st.denominator == "admissible" && map.metric != Metric::Lighting;
    for (int iy = 0; iy < map.ny; ++iy) {
        for (int ix = 0; ix < map.nx; ++ix) {
            const double x = map.x_at(ix);
            if (band_only && (x < sc.street.admissible_band_m[0] || x > sc.street.admissible_band_m[1]))
                continue;
            ++st.cells_total;
            const double v = map.value_at(ix, iy);
            const bool ok = st.covered_above ? v >= st.threshold : v <= st.threshold;
            if (ok)
                ++st.cells_covered;
        }
    }
    st.percent = st.cells_total > 0 ? 100.0 * st.cells_covered / st.cells_total : 0.0;
    return st;
}

void write_map_csv(const GridMap& map, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f)
        throw IoError("cannot write map file: " + path);
    std::fputs("x_m,y_m,value,level\n", f);
    for (int iy = 0; iy < map.ny; ++iy) {
        for (int ix = 0; ix < map.nx; ++ix) {
            const size_t idx = static_cast<size_t>(iy) * map.nx + ix;
            std::fprintf(f, "%.9g,%.9g,%.9g,%d\n", map.x_at(ix), map.y_at(iy), map.values[idx],
                         map.levels[idx]);
        }
    }
    if (std::fclose(f) != 0)
        throw IoError("failed to finish writing: " + path);
}

} // namespace streetlink
