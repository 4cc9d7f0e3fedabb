#include "streetlink/scenario.hpp"

#include "streetlink/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace streetlink {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;
constexpr double kSpeedOfLight = 299792458.0;

[[noreturn]] void fail_key(const std::string& path, const std::string& key) {
    throw ConfigError("unknown config key: " + (path.empty() ? key : path + "." + key));
}

double as_num(const json& v, const std::string& where) {
    if (!v.is_number())
        throw ConfigError(where + ": expected a number");
    return v.get<double>();
}

int as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer())
        throw ConfigError(where + ": expected an integer");
    return v.get<int>();
}

bool as_bool(const json& v, const std::string& where) {
    if (!v.is_boolean())
        throw ConfigError(where + ": expected true or false");
    return v.get<bool>();
}

std::string as_str(const json& v, const std::string& where) {
    if (!v.is_string())
        throw ConfigError(where + ": expected a string");
    return v.get<std::string>();
}

// per-side pairs accept either [a, b] or a single number for both sides
SidePair as_pair(const json& v, const std::string& where) {
    if (v.is_number())
        return {v.get<double>(), v.get<double>()};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw ConfigError(where + ": expected a number or a pair [a, b]");
}

std::array<int, 2> as_ipair(const json& v, const std::string& where) {
    if (v.is_number_integer())
        return {v.get<int>(), v.get<int>()};
    if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer())
        return {v[0].get<int>(), v[1].get<int>()};
    throw ConfigError(where + ": expected an integer or a pair [a, b]");
}

void merge_mount(const json& j, MountConfig& c, const std::string& path) {
    if (!j.is_object())
        throw ConfigError(path + ": expected an object");
    for (const auto& [k, v] : j.items()) {
        const std::string where = path + "." + k;
        if (k == "rod_length_m") c.rod_length_m = as_num(v, where);
        else if (k == "fixture_side_m") c.fixture_side_m = as_num(v, where);
        else if (k == "rod_angle_deg") c.rod_angle_deg = as_pair(v, where);
        else if (k == "fixture_rod_angle_deg") c.fixture_rod_angle_deg = as_pair(v, where);
        else if (k == "tilt_deg") c.tilt_deg = as_num(v, where);
        else if (k == "side_rotation_deg") c.side_rotation_deg = as_pair(v, where);
        else if (k == "fov_deg") c.fov_deg = as_pair(v, where);
        else fail_key(path, k);
    }
}

void merge_receiver(const json& j, ReceiverConfig& c, const std::string& path) {
    if (!j.is_object())
        throw ConfigError(path + ": expected an object");
    for (const auto& [k, v] : j.items()) {
        const std::string where = path + "." + k;
        if (k == "detector_area_m2") c.detector_area_m2 = as_num(v, where);
        else if (k == "offset_front_x_m") c.offset_front_x_m = as_num(v, where);
        else if (k == "offset_back_x_m") c.offset_back_x_m = as_num(v, where);
        else if (k == "offset_front_y_m") c.offset_front_y_m = as_num(v, where);
        else if (k == "offset_back_y_m") c.offset_back_y_m = as_num(v, where);
        else if (k == "extent_front_m") c.extent_front_m = as_num(v, where);
        else if (k == "extent_back_m") c.extent_back_m = as_num(v, where);
        else if (k == "extent_right_m") c.extent_right_m = as_num(v, where);
        else if (k == "extent_left_m") c.extent_left_m = as_num(v, where);
        else if (k == "tilt_deg") c.tilt_deg = as_num(v, where);
        else if (k == "side_rotation_deg") c.side_rotation_deg = as_pair(v, where);
        else if (k == "fov_deg") c.fov_deg = as_pair(v, where);
        else fail_key(path, k);
    }
}

void merge_street(const json& j, StreetConfig& c) {
    for (const auto& [k, v] : j.items()) {
        const std::string where = "street." + k;
        if (k == "lane_width_m") c.lane_width_m = as_num(v, where);
        else if (k == "pole_height_m") c.pole_height_m = as_num(v, where);
        else if (k == "vehicle_height_m") c.vehicle_height_m = as_num(v, where);
        else if (k == "pole_count") c.pole_count = as_int(v, where);
        else if (k == "pole_spacing_m") c.pole_spacing_m = as_num(v, where);
        else if (k == "opposite_offset_m") c.opposite_offset_m = as_num(v, where);
        else if (k == "opposite_row_lateral_m") c.opposite_row_lateral_m = as_num(v, where);
        else if (k == "admissible_band_m") {
            SidePair p = as_pair(v, where);
            c.admissible_band_m = {p[0], p[1]};
        }
        else if (k == "surface_receiver_area_m2") c.surface_receiver_area_m2 = as_num(v, where);
        else if (k == "lighting_includes_opposite_row") c.lighting_includes_opposite_row = as_bool(v, where);
        else if (k == "surface_cosine_incidence") c.surface_cosine_incidence = as_bool(v, where);
        else if (k == "serving_rule") c.serving_rule = as_str(v, where);
        else fail_key("street", k);
    }
}

void merge_vlc(const json& j, VlcConfig& c) {
    for (const auto& [k, v] : j.items()) {
        const std::string where = "vlc." + k;
        if (k == "tx_power_w") c.tx_power_w = as_num(v, where);
        else if (k == "lambert_order") c.lambert_order = as_num(v, where);
        else if (k == "wavelength_nm") c.wavelength_nm = as_num(v, where);
        else if (k == "filter_gain") c.filter_gain = as_num(v, where);
        else if (k == "concentrator_gain") c.concentrator_gain = as_num(v, where);
        else if (k == "oe_efficiency_a_per_w") c.oe_efficiency_a_per_w = as_num(v, where);
        else if (k == "bandwidth_hz") c.bandwidth_hz = as_num(v, where);
        else if (k == "tx_area_m2") c.tx_area_m2 = as_num(v, where);
        else if (k == "mount") merge_mount(v, c.mount, where);
        else if (k == "receiver") merge_receiver(v, c.receiver, where);
        else fail_key("vlc", k);
    }
}

void merge_thz(const json& j, ThzConfig& c) {
    for (const auto& [k, v] : j.items()) {
        const std::string where = "thz." + k;
        if (k == "tx_power_w") c.tx_power_w = as_num(v, where);
        else if (k == "carrier_hz") c.carrier_hz = as_num(v, where);
        else if (k == "tx_elements") c.tx_elements = as_ipair(v, where);
        else if (k == "rx_elements") c.rx_elements = as_ipair(v, where);
        else if (k == "element_spacing_m") c.element_spacing_m = as_num(v, where);
        else if (k == "steer_polar_deg") c.steer_polar_deg = as_num(v, where);
        else if (k == "steer_azimuth_deg") c.steer_azimuth_deg = as_num(v, where);
        else if (k == "noise_variance_w") c.noise_variance_w = as_num(v, where);
        else if (k == "symmetric_gains") c.symmetric_gains = as_bool(v, where);
        else if (k == "beam_tracking") c.beam_tracking = as_str(v, where);
        else if (k == "mount") merge_mount(v, c.mount, where);
        else if (k == "receiver") merge_receiver(v, c.receiver, where);
        else fail_key("thz", k);
    }
}

void merge_env(const json& j, EnvConfig& c) {
    for (const auto& [k, v] : j.items()) {
        const std::string where = "env." + k;
        if (k == "visibility_km") c.visibility_km = as_num(v, where);
        else if (k == "background_power_w") c.background_power_w = as_num(v, where);
        else if (k == "relative_humidity_pct") c.relative_humidity_pct = as_num(v, where);
        else if (k == "temperature_c") c.temperature_c = as_num(v, where);
        else if (k == "pressure_hpa") c.pressure_hpa = as_num(v, where);
        else fail_key("env", k);
    }
}

void merge_noise(const json& j, NoiseConfig& c) {
    for (const auto& [k, v] : j.items()) {
        const std::string where = "noise." + k;
        if (k == "electron_charge_c") c.electron_charge_c = as_num(v, where);
        else if (k == "boltzmann_j_per_k") c.boltzmann_j_per_k = as_num(v, where);
        else if (k == "noise_factor_i2") c.noise_factor_i2 = as_num(v, where);
        else if (k == "noise_factor_i3") c.noise_factor_i3 = as_num(v, where);
        else if (k == "temperature_k") c.temperature_k = as_num(v, where);
        else if (k == "fet_noise_gamma") c.fet_noise_gamma = as_num(v, where);
        else if (k == "fet_transconductance_s") c.fet_transconductance_s = as_num(v, where);
        else if (k == "open_loop_voltage_gain") c.open_loop_voltage_gain = as_num(v, where);
        else if (k == "capacitance_per_area_f_per_m2") c.capacitance_per_area_f_per_m2 = as_num(v, where);
        else fail_key("noise", k);
    }
}

void merge_hybrid(const json& j, HybridConfig& c) {
    for (const auto& [k, v] : j.items()) {
        const std::string where = "hybrid." + k;
        if (k == "switch_threshold_low_db") c.switch_threshold_low_db = as_num(v, where);
        else if (k == "switch_threshold_high_db") c.switch_threshold_high_db = as_num(v, where);
        else if (k == "smoothing_factor") c.smoothing_factor = as_num(v, where);
        else fail_key("hybrid", k);
    }
}

void merge_coverage(const json& j, CoverageConfig& c) {
    for (const auto& [k, v] : j.items()) {
        const std::string where = "coverage." + k;
        if (k == "grid_res_m") c.grid_res_m = as_num(v, where);
        else if (k == "lighting_threshold_w") c.lighting_threshold_w = as_num(v, where);
        else if (k == "snr_threshold_db") c.snr_threshold_db = as_num(v, where);
        else if (k == "outage_threshold") c.outage_threshold = as_num(v, where);
        else if (k == "denominator") c.denominator = as_str(v, where);
        else if (k == "x_min_m") c.x_min_m = as_num(v, where);
        else if (k == "x_max_m") c.x_max_m = as_num(v, where);
        else if (k == "y_min_m") c.y_min_m = as_num(v, where);
        else if (k == "y_max_m") c.y_max_m = as_num(v, where);
        else fail_key("coverage", k);
    }
}

json mount_json(const MountConfig& c) {
    return json{{"rod_length_m", c.rod_length_m},
                {"fixture_side_m", c.fixture_side_m},
                {"rod_angle_deg", {c.rod_angle_deg[0], c.rod_angle_deg[1]}},
                {"fixture_rod_angle_deg", {c.fixture_rod_angle_deg[0], c.fixture_rod_angle_deg[1]}},
                {"tilt_deg", c.tilt_deg},
                {"side_rotation_deg", {c.side_rotation_deg[0], c.side_rotation_deg[1]}},
                {"fov_deg", {c.fov_deg[0], c.fov_deg[1]}}};
}

json receiver_json(const ReceiverConfig& c) {
    return json{{"detector_area_m2", c.detector_area_m2},
                {"offset_front_x_m", c.offset_front_x_m},
                {"offset_back_x_m", c.offset_back_x_m},
                {"offset_front_y_m", c.offset_front_y_m},
                {"offset_back_y_m", c.offset_back_y_m},
                {"extent_front_m", c.extent_front_m},
                {"extent_back_m", c.extent_back_m},
                {"extent_right_m", c.extent_right_m},
                {"extent_left_m", c.extent_left_m},
                {"tilt_deg", c.tilt_deg},
                {"side_rotation_deg", {c.side_rotation_deg[0], c.side_rotation_deg[1]}},
                {"fov_deg", {c.fov_deg[0], c.fov_deg[1]}}};
}

void check(bool ok, const std::string& msg) {
    if (!ok)
        throw ConfigError(msg);
}

} // namespace

void Scenario::validate() const {
    check(street.pole_count >= 1, "street.pole_count: pole_count >= 1 required");
    check(street.pole_spacing_m > 0, "street.pole_spacing_m: must be positive");
    check(street.lane_width_m > 0, "street.lane_width_m: must be positive");
    check(street.pole_height_m > street.vehicle_height_m,
          "street.pole_height_m: pole below receiver plane");
    check(street.vehicle_height_m >= 0, "street.vehicle_height_m: must be non-negative");
    check(street.opposite_offset_m >= 0, "street.opposite_offset_m: must be non-negative");
    check(street.opposite_row_lateral_m >= 0, "street.opposite_row_lateral_m: must be non-negative");
    check(street.admissible_band_m[0] >= 0 && street.admissible_band_m[0] < street.admissible_band_m[1],
          "street.admissible_band_m: expected 0 <= low < high");
    check(street.surface_receiver_area_m2 > 0, "street.surface_receiver_area_m2: must be positive");
    check(street.serving_rule == "max" || street.serving_rule == "sum",
          "street.serving_rule: expected \"max\" or \"sum\"");

    check(vlc.tx_power_w >= 0, "vlc.tx_power_w: must be non-negative");
    check(vlc.lambert_order > 0, "vlc.lambert_order: must be positive");
    check(vlc.wavelength_nm > 0, "vlc.wavelength_nm: must be positive");
    check(vlc.filter_gain > 0, "vlc.filter_gain: must be positive");
    check(vlc.concentrator_gain > 0, "vlc.concentrator_gain: must be positive");
    check(vlc.oe_efficiency_a_per_w > 0, "vlc.oe_efficiency_a_per_w: must be positive");
    check(vlc.bandwidth_hz > 0, "vlc.bandwidth_hz: must be positive");
    check(vlc.receiver.detector_area_m2 > 0, "vlc.receiver.detector_area_m2: must be positive");

    check(thz.tx_power_w >= 0, "thz.tx_power_w: must be non-negative");
    check(thz.carrier_hz > 0, "thz.carrier_hz: must be positive");
    check(thz.tx_elements[0] >= 1 && thz.tx_elements[1] >= 1,
          "thz.tx_elements: must be at least 1 per axis");
    check(thz.rx_elements[0] >= 1 && thz.rx_elements[1] >= 1,
          "thz.rx_elements: must be at least 1 per axis");
    check(thz.element_spacing_m >= 0, "thz.element_spacing_m: must be non-negative");
    check(thz.noise_variance_w > 0, "thz.noise_variance_w: must be positive");
    check(thz.beam_tracking == "none" || thz.beam_tracking == "rx" || thz.beam_tracking == "tx" ||
              thz.beam_tracking == "both",
          "thz.beam_tracking: expected none, rx, tx, or both");

    for (const MountConfig* m : {&vlc.mount, &thz.mount}) {
        check(m->rod_length_m >= 0, "mount.rod_length_m: must be non-negative");
        check(m->fixture_side_m >= 0, "mount.fixture_side_m: must be non-negative");
        for (double f : m->fov_deg)
            check(f > 0 && f <= 180, "mount.fov_deg: must lie in (0, 180]");
    }
    for (const ReceiverConfig* r : {&vlc.receiver, &thz.receiver}) {
        for (double f : r->fov_deg)
            check(f > 0 && f <= 180, "receiver.fov_deg: must lie in (0, 180]");
    }

    check(env.visibility_km > 0, "env.visibility_km: must be positive");
    check(env.background_power_w >= 0, "env.background_power_w: must be non-negative");
    check(env.relative_humidity_pct >= 0 && env.relative_humidity_pct <= 100,
          "env.relative_humidity_pct: must lie in [0, 100]");
    check(env.pressure_hpa > 0, "env.pressure_hpa: must be positive");

    check(noise.electron_charge_c > 0, "noise.electron_charge_c: must be positive");
    check(noise.boltzmann_j_per_k > 0, "noise.boltzmann_j_per_k: must be positive");
    check(noise.noise_factor_i2 > 0, "noise.noise_factor_i2: must be positive");
    check(noise.noise_factor_i3 > 0, "noise.noise_factor_i3: must be positive");
    check(noise.temperature_k > 0, "noise.temperature_k: must be positive");
    check(noise.fet_noise_gamma > 0, "noise.fet_noise_gamma: must be positive");
    check(noise.fet_transconductance_s > 0, "noise.fet_transconductance_s: must be positive");
    check(noise.open_loop_voltage_gain > 0, "noise.open_loop_voltage_gain: must be positive");
    check(noise.capacitance_per_area_f_per_m2 > 0,
          "noise.capacitance_per_area_f_per_m2: must be positive");

    check(hybrid.switch_threshold_low_db <= hybrid.switch_threshold_high_db,
          "hybrid.switch_threshold_low_db: must not exceed the high threshold");
    check(hybrid.smoothing_factor > 0 && hybrid.smoothing_factor <= 1,
          "hybrid.smoothing_factor: must lie in (0, 1]");

    check(coverage.grid_res_m > 0, "coverage.grid_res_m: must be positive");
    check(coverage.lighting_threshold_w > 0, "coverage.lighting_threshold_w: must be positive");
    check(coverage.outage_threshold > 0 && coverage.outage_threshold < 1,
          "coverage.outage_threshold: must lie in (0, 1)");
    check(coverage.denominator == "full" || coverage.denominator == "admissible",
          "coverage.denominator: expected \"full\" or \"admissible\"");

    const GridWindow w = grid_window();
    check(w.x1 > w.x0, "coverage.x_max_m: window must have positive width");
    check(w.y1 > w.y0, "coverage.y_max_m: window must have positive length");
    check(w.x0 >= 0 && w.x1 <= street.lane_width_m,
          "coverage.x_min_m: window must lie within the lane");
    check(w.y0 >= 0 && w.y1 <= street_len_m(),
          "coverage.y_min_m: window must lie within the street");
}

Scenario::GridWindow Scenario::grid_window() const {
    GridWindow w;
    w.x0 = coverage.x_min_m >= 0 ? coverage.x_min_m : 0.0;
    w.x1 = coverage.x_max_m >= 0 ? coverage.x_max_m : street.lane_width_m;
    w.y0 = coverage.y_min_m >= 0 ? coverage.y_min_m : 0.0;
    w.y1 = coverage.y_max_m >= 0 ? coverage.y_max_m : street_len_m();
    return w;
}

nlohmann::json Scenario::to_json() const {
    json j;
    j["street"] = {{"lane_width_m", street.lane_width_m},
                   {"pole_height_m", street.pole_height_m},
                   {"vehicle_height_m", street.vehicle_height_m},
                   {"pole_count", street.pole_count},
                   {"pole_spacing_m", street.pole_spacing_m},
                   {"opposite_offset_m", street.opposite_offset_m},
                   {"opposite_row_lateral_m", street.opposite_row_lateral_m},
                   {"admissible_band_m", {street.admissible_band_m[0], street.admissible_band_m[1]}},
                   {"surface_receiver_area_m2", street.surface_receiver_area_m2},
                   {"lighting_includes_opposite_row", street.lighting_includes_opposite_row},
                   {"surface_cosine_incidence", street.surface_cosine_incidence},
                   {"serving_rule", street.serving_rule}};
    j["vlc"] = {{"tx_power_w", vlc.tx_power_w},
                {"lambert_order", vlc.lambert_order},
                {"wavelength_nm", vlc.wavelength_nm},
                {"filter_gain", vlc.filter_gain},
                {"concentrator_gain", vlc.concentrator_gain},
                {"oe_efficiency_a_per_w", vlc.oe_efficiency_a_per_w},
                {"bandwidth_hz", vlc.bandwidth_hz},
                {"tx_area_m2", vlc.tx_area_m2},
                {"mount", mount_json(vlc.mount)},
                {"receiver", receiver_json(vlc.receiver)}};
    j["thz"] = {{"tx_power_w", thz.tx_power_w},
                {"carrier_hz", thz.carrier_hz},
                {"tx_elements", {thz.tx_elements[0], thz.tx_elements[1]}},
                {"rx_elements", {thz.rx_elements[0], thz.rx_elements[1]}},
                {"element_spacing_m", thz.element_spacing_m},
                {"steer_polar_deg", thz.steer_polar_deg},
                {"steer_azimuth_deg", thz.steer_azimuth_deg},
                {"noise_variance_w", thz.noise_variance_w},
                {"symmetric_gains", thz.symmetric_gains},
                {"beam_tracking", thz.beam_tracking},
                {"mount", mount_json(thz.mount)},
                {"receiver", receiver_json(thz.receiver)}};
    j["env"] = {{"visibility_km", env.visibility_km},
                {"background_power_w", env.background_power_w},
                {"relative_humidity_pct", env.relative_humidity_pct},
                {"temperature_c", env.temperature_c},
                {"pressure_hpa", env.pressure_hpa}};
    j["noise"] = {{"electron_charge_c", noise.electron_charge_c},
                  {"boltzmann_j_per_k", noise.boltzmann_j_per_k},
                  {"noise_factor_i2", noise.noise_factor_i2},
                  {"noise_factor_i3", noise.noise_factor_i3},
                  {"temperature_k", noise.temperature_k},
                  {"fet_noise_gamma", noise.fet_noise_gamma},
                  {"fet_transconductance_s", noise.fet_transconductance_s},
                  {"open_loop_voltage_gain", noise.open_loop_voltage_gain},
                  {"capacitance_per_area_f_per_m2", noise.capacitance_per_area_f_per_m2}};
    j["hybrid"] = {{"switch_threshold_low_db", hybrid.switch_threshold_low_db},
                   {"switch_threshold_high_db", hybrid.switch_threshold_high_db},
                   {"smoothing_factor", hybrid.smoothing_factor}};
    j["coverage"] = {{"grid_res_m", coverage.grid_res_m},
                     {"lighting_threshold_w", coverage.lighting_threshold_w},
                     {"snr_threshold_db", coverage.snr_threshold_db},
                     {"outage_threshold", coverage.outage_threshold},
                     {"denominator", coverage.denominator},
                     {"x_min_m", coverage.x_min_m},
                     {"x_max_m", coverage.x_max_m},
                     {"y_min_m", coverage.y_min_m},
                     {"y_max_m", coverage.y_max_m}};
    return j;
}

void Scenario::merge_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw ConfigError("config root: expected an object");
    for (const auto& [k, v] : j.items()) {
        if (!v.is_object() && !(k == "street" || k == "vlc" || k == "thz" || k == "env" ||
                                k == "noise" || k == "hybrid" || k == "coverage"))
            fail_key("", k);
        if (k == "street") merge_street(v, street);
        else if (k == "vlc") merge_vlc(v, vlc);
        else if (k == "thz") merge_thz(v, thz);
        else if (k == "env") merge_env(v, env);
        else if (k == "noise") merge_noise(v, noise);
        else if (k == "hybrid") merge_hybrid(v, hybrid);
        else if (k == "coverage") merge_coverage(v, coverage);
        else fail_key("", k);
    }
}

Scenario Scenario::from_json(const nlohmann::json& j) {
    Scenario s;
    s.merge_json(j);
    return s;
}

Scenario Scenario::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return from_json(j);
}

void Scenario::set_path(const std::string& dotted_key, const std::string& value) {
    if (dotted_key.empty())
        throw ConfigError("empty config key in override");
    json parsed;
    try {
        parsed = json::parse(value);
    } catch (const json::parse_error&) {
        parsed = value; // bare strings like "max" are allowed unquoted
    }

    json patch = parsed;
    std::string rest = dotted_key;
    std::vector<std::string> parts;
    size_t pos;
    while ((pos = rest.find('.')) != std::string::npos) {
        parts.push_back(rest.substr(0, pos));
        rest.erase(0, pos + 1);
    }
    parts.push_back(rest);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        patch = json{{*it, patch}};
    merge_json(patch);
}

double Scenario::street_width_m() const {
    return 2.0 * street.lane_width_m;
}

double Scenario::opposite_row_lateral_m() const {
    return street.opposite_row_lateral_m > 0 ? street.opposite_row_lateral_m : street_width_m();
}

double Scenario::thz_element_spacing_m() const {
    return thz.element_spacing_m > 0 ? thz.element_spacing_m
                                     : 0.5 * kSpeedOfLight / thz.carrier_hz;
}

namespace {
double rad(double d) { return d * kPi / 180.0; }
} // namespace

Mount mount_for_side(const MountConfig& mc, int side) {
    return {rad(mc.tilt_deg), rad(mc.side_rotation_deg[side_index(side)]), side};
}

Mount receiver_mount_for_side(const ReceiverConfig& rc, int side) {
    return {rad(rc.tilt_deg), rad(rc.side_rotation_deg[side_index(side)]), side};
}

double mount_fov_rad(const MountConfig& mc, int side) {
    return rad(mc.fov_deg[side_index(side)]);
}

double receiver_fov_rad(const ReceiverConfig& rc, int side) {
    return rad(rc.fov_deg[side_index(side)]);
}

} // namespace streetlink
