#pragma once

#include <cmath>

namespace rirforge {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * (kPi / 180.0); }
inline double rad2deg(double r) { return r * (180.0 / kPi); }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

// Azimuth is measured in the xy-plane from +x toward +y, elevation from the
// xy-plane toward +z. Angles in degrees, azimuth wrapped to [-180, 180).
inline Vec3 direction_from_angles(double az_deg, double el_deg) {
    const double az = deg2rad(az_deg), el = deg2rad(el_deg);
    return {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
}

inline void angles_from_direction(const Vec3& v, double& az_deg, double& el_deg) {
    const Vec3 u = v.normalized();
    az_deg = rad2deg(std::atan2(u.y, u.x));
    if (az_deg >= 180.0) az_deg -= 360.0;
    double s = u.z;
    if (s > 1.0) s = 1.0;
    if (s < -1.0) s = -1.0;
    el_deg = rad2deg(std::asin(s));
}

// Right-handed local frame: x = forward, y = left, z = up.
struct Frame {
    Vec3 fwd{1, 0, 0}, left{0, 1, 0}, up{0, 0, 1};

    static Frame from_yaw_pitch(double yaw_deg, double pitch_deg) {
        Frame f;
        f.fwd = direction_from_angles(yaw_deg, pitch_deg);
        f.left = direction_from_angles(yaw_deg + 90.0, 0.0);
        f.up = f.fwd.cross(f.left);
        return f;
    }

    // Frame whose forward axis points along `dir`, roll-free w.r.t. world z.
    static Frame facing(const Vec3& dir) {
        double az, el;
        angles_from_direction(dir, az, el);
        return from_yaw_pitch(az, el);
    }

    Vec3 to_local(const Vec3& w) const {
        return {w.dot(fwd), w.dot(left), w.dot(up)};
    }
    Vec3 to_world(const Vec3& l) const {
        return fwd * l.x + left * l.y + up * l.z;
    }
};

}  // namespace rirforge
