#include "streetlink/geometry.hpp"

#include "streetlink/errors.hpp"

#include <algorithm>

namespace streetlink {

Mat3 rotation_about_x(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m[0][0] = 1; r.m[0][1] = 0; r.m[0][2] = 0;
    r.m[1][0] = 0; r.m[1][1] = c; r.m[1][2] = -s;
    r.m[2][0] = 0; r.m[2][1] = s; r.m[2][2] = c;
    return r;
}

Mat3 rotation_about_y(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m[0][0] = c;  r.m[0][1] = 0; r.m[0][2] = s;
    r.m[1][0] = 0;  r.m[1][1] = 1; r.m[1][2] = 0;
    r.m[2][0] = -s; r.m[2][1] = 0; r.m[2][2] = c;
    return r;
}

FixtureOffset fixture_offset(double rod_angle_rad, double fixture_rod_angle_rad,
                             double fixture_side_m, double rod_length_m) {
    const double half_diag = 0.5 * fixture_side_m;
    const double corner = rod_angle_rad - fixture_rod_angle_rad;
    return {half_diag * std::cos(corner) + rod_length_m * std::cos(rod_angle_rad),
            half_diag * std::sin(corner) + rod_length_m * std::sin(rod_angle_rad)};
}

Mat3 frame_of(const Mount& mount) {
    return rotation_about_y(-mount.tilt_rad) * rotation_about_x(mount.side * mount.side_rotation_rad);
}

Vec3 to_mount_frame(const Vec3& v, const Mount& mount) {
    const double ct = std::cos(mount.tilt_rad), st = std::sin(mount.tilt_rad);
    const double cv = std::cos(mount.side_rotation_rad), sv = std::sin(mount.side_rotation_rad);
    const double s = static_cast<double>(mount.side);
    return {v.x * ct - v.y * s * st * sv - v.z * st * cv,
            v.y * cv - v.z * s * sv,
            v.x * st + v.y * s * ct * sv + v.z * ct * cv};
}

Direction mount_direction(const Vec3& v, const Mount& mount) {
    const double len = norm(v);
    if (len < 1e-9)
        throw DegenerateLink("mount_direction: zero-length displacement");
    const Vec3 p = to_mount_frame(v, mount);
    const double cos_polar = std::clamp(p.z / len, -1.0, 1.0);
    return {std::acos(cos_polar), std::atan2(p.y, p.x)};
}

LinkPath link_path(const Vec3& fixture_pos, const Vec3& detector_pos,
                   const Mount& tx_mount, const Mount& rx_mount, int row_sign) {
    const double dx = detector_pos.x - fixture_pos.x;
    const double dy = detector_pos.y - fixture_pos.y;
    const double dz = fixture_pos.z - detector_pos.z;
    const double len = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (len < 1e-9)
        throw DegenerateLink("link_path: transmitter and receiver coincide");

    // the transmitter looks down the street toward the vehicle, the receiver
    // back up at the pole; both see the same lateral axis, so only the
    // along-street component changes sign between the two views
    const Vec3 v_tx{row_sign * dx, -dy, dz};
    const Vec3 v_rx{dx, dy, dz};
    return {len, mount_direction(v_tx, tx_mount), mount_direction(v_rx, rx_mount)};
}

double street_length_m(int pole_count, double spacing_m) {
    return (pole_count + 1) * spacing_m;
}

std::vector<double> serving_pole_positions_m(int pole_count, double spacing_m) {
    std::vector<double> ys;
    ys.reserve(static_cast<size_t>(std::max(pole_count, 0)));
    for (int n = 1; n <= pole_count; ++n)
        ys.push_back(n * spacing_m);
    return ys;
}

std::vector<double> opposite_pole_positions_m(int pole_count, double spacing_m, double phase_m) {
    const double length = street_length_m(pole_count, spacing_m);
    std::vector<double> ys;
    for (double y = phase_m; y < length; y += spacing_m)
        ys.push_back(y);
    return ys;
}

} // namespace streetlink
