#include "streetlink/link_metrics.hpp"

#include "streetlink/constants.hpp"

#include <cmath>
#include <limits>

namespace streetlink {

double shot_noise_a2(const NoiseConfig& n, double oe_efficiency_a_per_w, double bandwidth_hz,
                     double received_power_w, double background_power_w) {
    return 2.0 * n.electron_charge_c * oe_efficiency_a_per_w * bandwidth_hz *
           (received_power_w + background_power_w);
}

double thermal_noise_a2(const NoiseConfig& n, double detector_area_m2, double bandwidth_hz) {
    const double cap = n.capacitance_per_area_f_per_m2;
    const double b2 = bandwidth_hz * bandwidth_hz;
    const double feedback = 8.0 * kPi * n.boltzmann_j_per_k * n.temperature_k /
                            n.open_loop_voltage_gain * cap * detector_area_m2 *
                            n.noise_factor_i2 * b2;
    const double fet = 16.0 * kPi * kPi * n.boltzmann_j_per_k * n.fet_noise_gamma *
                       n.temperature_k / n.fet_transconductance_s * cap * cap *
                       detector_area_m2 * detector_area_m2 * n.noise_factor_i3 *
                       b2 * bandwidth_hz;
    return feedback + fet;
}

double to_db(double linear) {
    if (linear <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(linear);
}

double from_db(double db) {
    return std::pow(10.0, db / 10.0);
}

double vlc_snr(double received_power_w, double oe_efficiency_a_per_w, double noise_var_a2) {
    const double sig = oe_efficiency_a_per_w * received_power_w;
    return sig * sig / noise_var_a2;
}

double vlc_sinr(double received_power_w, double interference_power_w, double background_power_w,
                double oe_efficiency_a_per_w, double noise_var_a2) {
    const double sig = oe_efficiency_a_per_w * received_power_w;
    const double interf = oe_efficiency_a_per_w * (background_power_w + interference_power_w);
    return sig * sig / (noise_var_a2 + interf * interf);
}

double thz_snr(double received_power_w, double noise_var_w) {
    return received_power_w / noise_var_w;
}

double thz_sinr(double received_power_w, double interference_power_w, double noise_var_w) {
    return received_power_w / (noise_var_w + interference_power_w);
}

double gaussian_q(double x) {
    if (x < -8.0) return 1.0;
    if (x > 8.0) return 0.0;
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

double gaussian_cdf(double x) {
    return gaussian_q(-x);
}

namespace {

// detection thresholds implied by an SNR requirement: the optical branch
// compares an amplitude, the array branch a power
double vlc_decision_threshold(double noise_sigma_a, double threshold_db) {
    return noise_sigma_a * std::sqrt(from_db(threshold_db));
}

double thz_decision_threshold(double noise_var_w, double threshold_db) {
    return noise_var_w * from_db(threshold_db);
}

} // namespace

double vlc_outage(double received_power_w, double oe_efficiency_a_per_w, double noise_sigma_a,
                  double threshold_db) {
    const double y = vlc_decision_threshold(noise_sigma_a, threshold_db);
    const double mean = oe_efficiency_a_per_w * received_power_w;
    return gaussian_cdf((y - mean) / noise_sigma_a);
}

double thz_outage(double received_power_w, double noise_var_w, double threshold_db) {
    const double y = thz_decision_threshold(noise_var_w, threshold_db);
    const double sigma = std::sqrt(noise_var_w);
    return gaussian_cdf((y - received_power_w) / sigma);
}

double psc_outage(double vlc_power_w, double oe_efficiency_a_per_w, double vlc_sigma_a,
                  double thz_power_w, double thz_noise_var_w, double threshold_db) {
    return vlc_outage(vlc_power_w, oe_efficiency_a_per_w, vlc_sigma_a, threshold_db) *
           thz_outage(thz_power_w, thz_noise_var_w, threshold_db);
}

double gs_outage(double vlc_power_w, double oe_efficiency_a_per_w, double vlc_sigma_a,
                 double thz_power_w, double thz_noise_var_w, double low_db, double high_db) {
    const double f_vl = vlc_outage(vlc_power_w, oe_efficiency_a_per_w, vlc_sigma_a, low_db);
    const double f_vh = vlc_outage(vlc_power_w, oe_efficiency_a_per_w, vlc_sigma_a, high_db);
    const double f_tl = thz_outage(thz_power_w, thz_noise_var_w, low_db);
    const double f_th = thz_outage(thz_power_w, thz_noise_var_w, high_db);

    // fallback branch: both detection variables added, thresholds added
    const double y_co = vlc_decision_threshold(vlc_sigma_a, high_db) +
                        thz_decision_threshold(thz_noise_var_w, high_db);
    const double mean_co = oe_efficiency_a_per_w * vlc_power_w + thz_power_w;
    const double sigma_co = std::sqrt(vlc_sigma_a * vlc_sigma_a + thz_noise_var_w);
    const double f_co = gaussian_cdf((y_co - mean_co) / sigma_co);

    return f_vl * f_tl *
           (1.0 + f_tl * (f_vh - f_vl) + f_vl * (f_th - f_tl) + (f_vh - f_vl) * (f_vh - f_vl) * f_co);
}

} // namespace streetlink
