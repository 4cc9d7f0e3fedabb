#pragma once

// Placement and orientation math for pole-mounted transmitters and
// vehicle-mounted receivers.
//
// Global frame: x across the street (0 at the serving-side curb line),
// y along the street, z up.  All angles in radians, all lengths in meters.

#include <cmath>
#include <vector>

namespace streetlink {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

struct Mat3 {
    double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
        return r;
    }
    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[j][i];
        return r;
    }
};

// right-handed rotations about the coordinate axes
Mat3 rotation_about_x(double angle_rad);
Mat3 rotation_about_y(double angle_rad);

// Horizontal offset of a fixture center from its pole base.  Each pole
// carries two fixtures on rods; the rod meets the fixture at the corner,
// so the offset combines the rod itself and half the fixture diagonal.
struct FixtureOffset {
    double lateral_m = 0.0;       // across the street, away from the curb
    double longitudinal_m = 0.0;  // along the street
};
FixtureOffset fixture_offset(double rod_angle_rad, double fixture_rod_angle_rad,
                             double fixture_side_m, double rod_length_m);

// Direction of a displacement expressed in a mount's own frame.
// polar is measured from the mount boresight, azimuth in the mount plane.
struct Direction {
    double polar_rad = 0.0;    // [0, pi]
    double azimuth_rad = 0.0;  // (-pi, pi]
};

// A mount is tilted toward the street interior by tilt_rad and rolled
// about the street axis by side * side_rotation_rad, where side is -1 for
// the up-street unit of a pair and +1 for the down-street unit.
struct Mount {
    double tilt_rad = 0.0;
    double side_rotation_rad = 0.0;
    int side = -1;
};

// frame_of(mount) * v rotates a displacement into the mount frame;
// mount_direction is the closed-form equivalent plus the spherical split.
Mat3 frame_of(const Mount& mount);
Vec3 to_mount_frame(const Vec3& v, const Mount& mount);
Direction mount_direction(const Vec3& v, const Mount& mount);

// Transmitter-side and receiver-side views of one fixture-detector pair.
// Throws DegenerateLink when the separation is below 1e-9 m.
struct LinkPath {
    double distance_m = 0.0;
    Direction tx;
    Direction rx;
};
// row_sign is +1 for the serving row and -1 for the mirrored opposite row,
// whose fixtures see the lateral offset with flipped sign.
LinkPath link_path(const Vec3& fixture_pos, const Vec3& detector_pos,
                   const Mount& tx_mount, const Mount& rx_mount, int row_sign);

// Pole layout along one street segment.  The serving row has pole_count
// poles at y = spacing, 2*spacing, ...; the street runs from y = 0 to
// (pole_count + 1) * spacing.  The opposite row is phase-shifted and
// fills the same span.
double street_length_m(int pole_count, double spacing_m);
std::vector<double> serving_pole_positions_m(int pole_count, double spacing_m);
std::vector<double> opposite_pole_positions_m(int pole_count, double spacing_m, double phase_m);

} // namespace streetlink
