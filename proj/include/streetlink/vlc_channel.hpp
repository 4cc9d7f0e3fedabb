#pragma once

// Optical channel: generalized Lambertian emission, atmospheric extinction
// by visibility, and the per-pair received power with field-of-view limits
// on both ends.

#include "streetlink/geometry.hpp"

namespace streetlink {

// size-distribution exponent of the visibility-driven scattering model;
// piecewise in the visibility, continuous at the 6 km seam
double scattering_exponent(double visibility_km);

// extinction coefficient in 1/km at the given wavelength
double vlc_attenuation_per_km(double visibility_km, double wavelength_nm);

// one-way transmittance of a path; distance in meters, coefficient per km
double path_transmittance(double attenuation_per_km, double distance_m);

struct VlcLink {
    double tx_power_w = 0.63;
    double lambert_order = 5.0;
    double detector_area_m2 = 1e-3;
    double filter_gain = 1.0;
    double concentrator_gain = 1.0;
    double attenuation_per_km = 0.0;
    double tx_fov_rad = 1.5707963267948966;
    double rx_fov_rad = 1.5707963267948966;
    // treat the receiver as ideally oriented (used for surface illumination
    // studies); the emitter keeps its Lambertian profile
    bool flat_incidence = false;
};

// received optical power of one emitter-detector pair; zero outside either
// field of view and zero behind either plane
double vlc_pair_power_w(const LinkPath& path, const VlcLink& link);

} // namespace streetlink
