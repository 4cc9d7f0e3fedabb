#pragma once

// Street-level evaluation: place fixtures and detectors, compute per-point
// link metrics, sweep them over a grid, and reduce maps to coverage
// percentages.

#include "streetlink/geometry.hpp"
#include "streetlink/scenario.hpp"
#include "streetlink/thz_channel.hpp"
#include "streetlink/vlc_channel.hpp"

#include <string>
#include <vector>

namespace streetlink {

enum class Metric {
    Lighting,
    SnrVlc,
    SinrVlc,
    SnrThz,
    SinrThz,
    SicGs,
    SicPsc,
    OutageVlc,
    OutageThz,
    OutageGs,
    OutagePsc,
};

Metric metric_from_name(const std::string& name); // LC, SNR_V, SINR_V, ... OP_PSC
std::string metric_name(Metric m);
const std::vector<Metric>& all_metrics();
bool metric_is_outage(Metric m);
bool metric_is_db(Metric m);

// map value to its display band: 0..4, higher is better for every metric
int level_for(Metric m, double value);

struct FixtureSite {
    Vec3 pos;
    int side = -1;     // -1 up-street unit, +1 down-street unit
    int row_sign = 1;  // +1 serving row, -1 mirrored opposite row
    int pole = 0;      // pole index within its row
};

struct RadioLayout {
    std::vector<FixtureSite> serving;
    std::vector<FixtureSite> opposite;
    int serving_poles = 0;
};
RadioLayout build_layout(const MountConfig& mc, const Scenario& sc);

struct PointMetrics {
    double lighting_w = 0.0;
    double vlc_serving_w = 0.0;
    double vlc_interference_w = 0.0;
    double thz_serving_w = 0.0;
    double thz_interference_w = 0.0;
    double snr_vlc_db = 0.0;
    double sinr_vlc_db = 0.0;
    double snr_thz_db = 0.0;
    double sinr_thz_db = 0.0;
    double sic_gs_db = 0.0;
    double sic_psc_db = 0.0;
    double outage_vlc = 1.0;
    double outage_thz = 1.0;
    double outage_gs = 1.0;
    double outage_psc = 1.0;
    bool admissible = false;
};

double metric_value(const PointMetrics& pm, Metric m);

class PointEvaluator {
public:
    explicit PointEvaluator(const Scenario& sc);

    // vehicle reference point on the serving lane; lighting is sampled on
    // the road surface at the same spot
    PointMetrics evaluate(double x_m, double y_m) const;

    const RadioLayout& vlc_layout() const { return vlc_layout_; }
    const RadioLayout& thz_layout() const { return thz_layout_; }

private:
    struct DetectorSpec {
        double dx_m, dy_m; // subtracted from the reference point
        Mount mount;
        double fov_rad;
        int side;
    };

    double vlc_sum_w(const std::vector<FixtureSite>& fixtures, double x_m, double y_m,
                     bool per_pole_max) const;
    // {beam-locked power from the strongest pole, ambient power from the rest};
    // with lock_one false everything counts as ambient
    std::pair<double, double> thz_row_w(const std::vector<FixtureSite>& fixtures, double x_m,
                                        double y_m, bool lock_one) const;
    double lighting_w(double x_m, double y_m) const;

    const Scenario sc_;
    RadioLayout vlc_layout_;
    RadioLayout thz_layout_;
    std::vector<DetectorSpec> vlc_detectors_;
    std::vector<DetectorSpec> thz_detectors_;
    double vlc_attenuation_per_km_ = 0.0;
    double thz_absorption_per_m_ = 0.0;
    double thz_spacing_m_ = 0.0;
    double thermal_noise_a2_ = 0.0;
    double surface_fov_rad_ = 0.0;
};

struct GridMap {
    Metric metric = Metric::Lighting;
    int nx = 0, ny = 0;
    double res_m = 0.25;
    double x0_m = 0.0, y0_m = 0.0; // window origin
    std::vector<double> values; // row-major, y outer, x inner
    std::vector<int> levels;

    double x_at(int ix) const { return x0_m + (ix + 0.5) * res_m; }
    double y_at(int iy) const { return y0_m + (iy + 0.5) * res_m; }
    double value_at(int ix, int iy) const { return values[static_cast<size_t>(iy) * nx + ix]; }
};

// one sweep shared by all requested maps; threads <= 0 picks the hardware
// concurrency
std::vector<GridMap> compute_maps(const Scenario& sc, const std::vector<Metric>& metrics,
                                  int threads = 1);
GridMap compute_map(const Scenario& sc, Metric metric, int threads = 1);

struct CoverageStats {
    Metric metric;
    double threshold = 0.0;
    bool covered_above = true; // outage maps cover below the threshold
    long cells_total = 0;
    long cells_covered = 0;
    double percent = 0.0;
    std::string denominator;
};
CoverageStats coverage_stats(const GridMap& map, const Scenario& sc);

void write_map_csv(const GridMap& map, const std::string& path);

} // namespace streetlink
