#pragma once

// Scenario description: street layout, radio hardware, environment, and
// evaluation settings.  Configs carry angles in degrees; everything that
// leaves this module through the helper accessors is in SI units and
// radians.

#include "streetlink/geometry.hpp"

#include <array>
#include <iosfwd>
#include <string>

#include <json.hpp>

namespace streetlink {

// index 0 holds the up-street unit (side -1), index 1 the down-street
// unit (side +1) of each pair
using SidePair = std::array<double, 2>;

inline int side_index(int side) { return side < 0 ? 0 : 1; }

struct MountConfig {
    double rod_length_m = 1.0;
    double fixture_side_m = 0.3;
    SidePair rod_angle_deg{0.0, 0.0};
    SidePair fixture_rod_angle_deg{0.0, 0.0};
    double tilt_deg = 0.0;
    SidePair side_rotation_deg{0.0, 0.0};
    SidePair fov_deg{90.0, 90.0};
};

struct ReceiverConfig {
    double detector_area_m2 = 9e-3;
    double offset_front_x_m = 0.75;
    double offset_back_x_m = 0.75;
    double offset_front_y_m = 0.75;
    double offset_back_y_m = 0.75;
    double extent_front_m = 3.0;
    double extent_back_m = 2.0;
    double extent_right_m = 1.0;
    double extent_left_m = 1.0;
    double tilt_deg = 0.0;
    SidePair side_rotation_deg{0.0, 0.0};
    SidePair fov_deg{90.0, 90.0};
};

struct StreetConfig {
    double lane_width_m = 10.0;
    double pole_height_m = 10.0;
    double vehicle_height_m = 1.5;
    int pole_count = 3;
    double pole_spacing_m = 30.0;
    double opposite_offset_m = 15.0;
    // 0 means twice the lane width (mirrored row at the far curb line)
    double opposite_row_lateral_m = 0.0;
    std::array<double, 2> admissible_band_m{1.0, 9.0};
    double surface_receiver_area_m2 = 3.4e-3;
    bool lighting_includes_opposite_row = true;
    bool surface_cosine_incidence = false;
    std::string serving_rule = "sum"; // or "max": nearest pole only
};

struct VlcConfig {
    double tx_power_w = 0.63;
    double lambert_order = 5.0;
    double wavelength_nm = 550.0;
    double filter_gain = 1.0;
    double concentrator_gain = 1.0;
    double oe_efficiency_a_per_w = 0.35;
    double bandwidth_hz = 1e7;
    double tx_area_m2 = 0.09;
    MountConfig mount;
    ReceiverConfig receiver;
};

struct ThzConfig {
    double tx_power_w = 0.63;
    double carrier_hz = 144e9;
    std::array<int, 2> tx_elements{10, 10};
    std::array<int, 2> rx_elements{10, 10};
    double element_spacing_m = 0.0; // 0 means half a carrier wavelength
    double steer_polar_deg = 0.0;
    double steer_azimuth_deg = 0.0;
    double noise_variance_w = 2.7e-5;
    bool symmetric_gains = false;
    std::string beam_tracking = "none"; // none | rx | tx | both
    MountConfig mount;
    ReceiverConfig receiver;
};

struct EnvConfig {
    double visibility_km = 50.0;
    double background_power_w = 2.9e-10;
    double relative_humidity_pct = 50.0;
    double temperature_c = 25.0;
    double pressure_hpa = 1013.25;
};

struct NoiseConfig {
    double electron_charge_c = 1.6e-19;
    double boltzmann_j_per_k = 1.38e-23;
    double noise_factor_i2 = 0.562;
    double noise_factor_i3 = 0.868;
    double temperature_k = 300.0;
    double fet_noise_gamma = 1.5;
    double fet_transconductance_s = 0.03;
    double open_loop_voltage_gain = 10.0;
    double capacitance_per_area_f_per_m2 = 1.12e-6;
};

struct HybridConfig {
    double switch_threshold_low_db = 1.0;
    double switch_threshold_high_db = 5.0;
    double smoothing_factor = 0.5;
};

struct CoverageConfig {
    double grid_res_m = 0.25;
    double lighting_threshold_w = 2e-6;
    double snr_threshold_db = 5.0;
    double outage_threshold = 1e-6;
    std::string denominator = "admissible"; // or "full" to count the whole lane
    // evaluation window; negative bounds resolve to the street extents
    double x_min_m = -1.0;
    double x_max_m = -1.0;
    double y_min_m = -1.0;
    double y_max_m = -1.0;
};

struct Scenario {
    StreetConfig street;
    VlcConfig vlc;
    ThzConfig thz;
    EnvConfig env;
    NoiseConfig noise;
    HybridConfig hybrid;
    CoverageConfig coverage;

    // throws ConfigError with a message naming the offending key
    void validate() const;

    nlohmann::json to_json() const;
    // merge: keys present in j override current values, everything else is
    // kept; unknown keys are rejected
    void merge_json(const nlohmann::json& j);
    static Scenario from_json(const nlohmann::json& j);
    static Scenario from_file(const std::string& path);

    // dotted-path override, value parsed as JSON with a string fallback;
    // scalars broadcast over per-side pairs
    void set_path(const std::string& dotted_key, const std::string& value);

    // derived quantities
    double street_width_m() const;           // both lanes
    double opposite_row_lateral_m() const;   // resolved auto value
    double thz_element_spacing_m() const;    // resolved auto value
    double street_len_m() const { return street_length_m(street.pole_count, street.pole_spacing_m); }

    // evaluation window with auto bounds resolved
    struct GridWindow {
        double x0, x1, y0, y1;
    };
    GridWindow grid_window() const;
};

// mount parameters for one unit of a pair, converted to radians
Mount mount_for_side(const MountConfig& mc, int side);
Mount receiver_mount_for_side(const ReceiverConfig& rc, int side);

// half-angle FOV in radians for one unit
double mount_fov_rad(const MountConfig& mc, int side);
double receiver_fov_rad(const ReceiverConfig& rc, int side);

} // namespace streetlink
