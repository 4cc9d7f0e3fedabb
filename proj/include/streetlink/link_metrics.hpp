#pragma once

// Electrical-domain link quality: receiver noise, signal-to-noise and
// signal-to-interference-plus-noise ratios, and Gaussian outage
// probabilities for the single links and the switched schemes.

#include "streetlink/scenario.hpp"

namespace streetlink {

// shot noise variance at the photodetector (A^2)
double shot_noise_a2(const NoiseConfig& n, double oe_efficiency_a_per_w, double bandwidth_hz,
                     double received_power_w, double background_power_w);

// thermal noise variance of the transimpedance front end (A^2)
double thermal_noise_a2(const NoiseConfig& n, double detector_area_m2, double bandwidth_hz);

// 10*log10 with -inf for non-positive arguments
double to_db(double linear);
double from_db(double db);

// electrical ratios, linear
double vlc_snr(double received_power_w, double oe_efficiency_a_per_w, double noise_var_a2);
double vlc_sinr(double received_power_w, double interference_power_w, double background_power_w,
                double oe_efficiency_a_per_w, double noise_var_a2);
double thz_snr(double received_power_w, double noise_var_w);
double thz_sinr(double received_power_w, double interference_power_w, double noise_var_w);

// standard normal tail and distribution functions, clamped to {0, 1}
// beyond 8 standard deviations
double gaussian_q(double x);
double gaussian_cdf(double x);

// probability that the optical link's detection variable stays under the
// threshold implied by an SNR requirement in dB
double vlc_outage(double received_power_w, double oe_efficiency_a_per_w, double noise_sigma_a,
                  double threshold_db);
// same for the array link, whose requirement scales the noise power
double thz_outage(double received_power_w, double noise_var_w, double threshold_db);

// selection combining: both branches must fail
double psc_outage(double vlc_power_w, double oe_efficiency_a_per_w, double vlc_sigma_a,
                  double thz_power_w, double thz_noise_var_w, double threshold_db);

// switching scheme with a hysteresis band between the two thresholds; the
// last term covers the combining fallback when both branches sag
double gs_outage(double vlc_power_w, double oe_efficiency_a_per_w, double vlc_sigma_a,
                 double thz_power_w, double thz_noise_var_w, double low_db, double high_db);

} // namespace streetlink
