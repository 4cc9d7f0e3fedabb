#include "streetlink/thz_channel.hpp"

#include "streetlink/constants.hpp"

#include <cmath>

namespace streetlink {

double axis_array_factor(int n_elements, double psi_rad) {
    if (n_elements <= 1)
        return 1.0;
    const double half = 0.5 * psi_rad;
    const double denom = std::sin(half);
    if (std::abs(denom) < 1e-9) {
        // l'Hopital at the grating points, evaluates to +/-1
        return std::cos(n_elements * half) / std::cos(half);
    }
    return std::sin(n_elements * half) / (n_elements * denom);
}

double planar_array_factor(const PlanarArray& array, double wavenumber_per_m,
                           double polar_rad, double azimuth_rad) {
    const double kd = wavenumber_per_m * array.element_spacing_m;
    const double sp = std::sin(polar_rad);
    const double sp0 = std::sin(array.steer_polar_rad);
    const double psi_x = kd * (sp * std::cos(azimuth_rad) - sp0 * std::cos(array.steer_azimuth_rad));
    const double psi_y = kd * (sp * std::sin(azimuth_rad) - sp0 * std::sin(array.steer_azimuth_rad));
    return axis_array_factor(array.elements[0], psi_x) * axis_array_factor(array.elements[1], psi_y);
}

double saturation_vapor_pressure_hpa(double temperature_c, double pressure_hpa) {
    return 6.1121 * (1.0007 + 3.46e-6 * pressure_hpa) *
           std::exp(17.502 * temperature_c / (240.97 + temperature_c));
}

double water_vapor_mixing_ratio(double relative_humidity_pct, double temperature_c,
                                double pressure_hpa) {
    return relative_humidity_pct * saturation_vapor_pressure_hpa(temperature_c, pressure_hpa) /
           (100.0 * pressure_hpa);
}

double molecular_absorption_per_m(double carrier_hz, double mixing_ratio) {
    const double r = mixing_ratio;
    const double a[6] = {5.159e-5 * (1.0 - r) * (-6.65e-5 * (1.0 - r) + 0.0159),
                         0.1925 * r * (0.1350 * r + 0.0318),
                         0.2251 * r * (0.1314 * r + 0.0297),
                         2.053 * r * (0.1717 * r + 0.0306),
                         0.177 * r * (0.0832 * r + 0.0213),
                         2.146 * r * (0.1206 * r + 0.0277)};
    const double b[6] = {std::pow(-2.09e-4 * (1.0 - r) + 0.05, 2),
                         std::pow(0.4241 * r + 0.0998, 2),
                         std::pow(0.4127 * r + 0.0932, 2),
                         std::pow(0.5394 * r + 0.0961, 2),
                         std::pow(0.2615 * r + 0.0668, 2),
                         std::pow(0.3789 * r + 0.0871, 2)};
    // line centers in wavenumbers (1/cm)
    const double p[6] = {3.96, 6.11, 10.84, 12.68, 14.65, 14.94};
    const double nu = carrier_hz / (100.0 * kSpeedOfLight);
    double total = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double off = nu - p[i];
        total += a[i] / (b[i] + off * off);
    }
    total += r / 0.0157 * (2e-4 + 0.915e-112 * std::pow(carrier_hz, 9.42));
    return total;
}

double thz_path_gain(double carrier_hz, double distance_m, double absorption_per_m) {
    return kSpeedOfLight / (4.0 * kPi * carrier_hz * distance_m) *
           std::exp(-0.5 * distance_m * absorption_per_m);
}

namespace {
double wavenumber(double carrier_hz) { return 2.0 * kPi * carrier_hz / kSpeedOfLight; }
} // namespace

double thz_tx_gain(const ThzLink& link, const Direction& d) {
    const double af = planar_array_factor(link.tx_array, wavenumber(link.carrier_hz),
                                          d.polar_rad, d.azimuth_rad);
    const double n = link.tx_array.elements[0] * link.tx_array.elements[1];
    const double g = n * af;
    return kPi * g * g;
}

double thz_rx_gain(const ThzLink& link, const Direction& d) {
    const double af = planar_array_factor(link.rx_array, wavenumber(link.carrier_hz),
                                          d.polar_rad, d.azimuth_rad);
    const double n = link.rx_array.elements[0] * link.rx_array.elements[1];
    const double g = link.symmetric_gains ? n * af : n * af * af;
    return kPi * g * g;
}

double thz_pair_power_w(const LinkPath& path, const ThzLink& link) {
    if (path.tx.polar_rad > link.tx_fov_rad || path.rx.polar_rad > link.rx_fov_rad)
        return 0.0;
    const double h = thz_path_gain(link.carrier_hz, path.distance_m, link.absorption_per_m);
    return link.tx_power_w * h * h * thz_tx_gain(link, path.tx) * thz_rx_gain(link, path.rx);
}

} // namespace streetlink
