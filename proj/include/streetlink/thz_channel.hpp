#pragma once

// Sub-terahertz channel: uniform planar array patterns with phase steering,
// free-space spreading, and water-vapor molecular absorption.

#include "streetlink/geometry.hpp"

#include <array>

namespace streetlink {

// single-axis normalized array factor for n elements at phase step psi;
// the removable singularities at psi = 2*pi*j evaluate to +/-1
double axis_array_factor(int n_elements, double psi_rad);

struct PlanarArray {
    std::array<int, 2> elements{10, 10}; // lateral, longitudinal axes
    double element_spacing_m = 0.0;
    double steer_polar_rad = 0.0;
    double steer_azimuth_rad = 0.0;
};

// normalized pattern toward a direction, product of the two axis factors
double planar_array_factor(const PlanarArray& array, double wavenumber_per_m,
                           double polar_rad, double azimuth_rad);

// saturation vapor pressure in hPa at temperature (deg C) and pressure (hPa)
double saturation_vapor_pressure_hpa(double temperature_c, double pressure_hpa);

// volumetric water-vapor mixing ratio (dimensionless)
double water_vapor_mixing_ratio(double relative_humidity_pct, double temperature_c,
                                double pressure_hpa);

// molecular absorption coefficient in 1/m: six resonance lines plus a
// continuum that grows steeply with frequency
double molecular_absorption_per_m(double carrier_hz, double mixing_ratio);

// amplitude path gain: spreading factor times the absorption envelope
double thz_path_gain(double carrier_hz, double distance_m, double absorption_per_m);

struct ThzLink {
    double tx_power_w = 0.63;
    double carrier_hz = 144e9;
    double absorption_per_m = 0.0;
    PlanarArray tx_array;
    PlanarArray rx_array;
    double tx_fov_rad = 1.5707963267948966;
    double rx_fov_rad = 1.5707963267948966;
    // false keeps the asymmetric transmit/receive gain exponents of the
    // reference design; true uses the same exponent on both sides
    bool symmetric_gains = false;
};

double thz_tx_gain(const ThzLink& link, const Direction& d);
double thz_rx_gain(const ThzLink& link, const Direction& d);

// received power of one array-to-array pair; zero outside either fov
double thz_pair_power_w(const LinkPath& path, const ThzLink& link);

} // namespace streetlink
