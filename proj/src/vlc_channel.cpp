#include "streetlink/vlc_channel.hpp"

#include "streetlink/constants.hpp"

#include <cmath>

namespace streetlink {

double scattering_exponent(double visibility_km) {
    if (visibility_km > 50.0) return 1.6;
    if (visibility_km > 6.0) return 1.3;
    if (visibility_km > 1.0) return 0.16 * visibility_km + 0.34;
    if (visibility_km > 0.5) return visibility_km - 0.5;
    return 0.0;
}

double vlc_attenuation_per_km(double visibility_km, double wavelength_nm) {
    const double ex = scattering_exponent(visibility_km);
    return 3.912 / visibility_km * std::pow(wavelength_nm / 550.0, ex);
}

double path_transmittance(double attenuation_per_km, double distance_m) {
    return std::exp(-attenuation_per_km * distance_m / 1000.0);
}

double vlc_pair_power_w(const LinkPath& path, const VlcLink& link) {
    if (path.tx.polar_rad > link.tx_fov_rad || path.rx.polar_rad > link.rx_fov_rad)
        return 0.0;
    const double cos_tx = std::cos(path.tx.polar_rad);
    const double cos_rx = link.flat_incidence ? 1.0 : std::cos(path.rx.polar_rad);
    if (cos_tx <= 0.0 || cos_rx <= 0.0)
        return 0.0;
    const double transmittance = path_transmittance(link.attenuation_per_km, path.distance_m);
    return link.tx_power_w * link.detector_area_m2 * link.filter_gain * link.concentrator_gain *
           (link.lambert_order + 1.0) * transmittance *
           std::pow(cos_tx, link.lambert_order) * cos_rx /
           (2.0 * kPi * path.distance_m * path.distance_m);
}

} // namespace streetlink
