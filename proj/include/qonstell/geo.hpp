#pragma once

#include <cmath>
#include <numbers>

namespace qonstell {

// Spherical Earth model shared by the whole library.
inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kMuKm3PerS2 = 398600.4418;            // GM of Earth
inline constexpr double kEarthRotationRadPerS = 7.2921159e-5; // sidereal rate

inline constexpr double kDegToRad = std::numbers::pi / 180.0;
inline constexpr double kRadToDeg = 180.0 / std::numbers::pi;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
};

// Earth-fixed position of a point on the sphere (station altitude ignored).
inline Vec3 surface_point_ecef(double lat_deg, double lon_deg) {
    const double lat = lat_deg * kDegToRad;
    const double lon = lon_deg * kDegToRad;
    const double c = std::cos(lat);
    return {kEarthRadiusKm * c * std::cos(lon), kEarthRadiusKm * c * std::sin(lon),
            kEarthRadiusKm * std::sin(lat)};
}

struct GeoPoint {
    double lat_deg;
    double lon_deg;
};

// Sub-satellite point of an Earth-fixed position.
inline GeoPoint subsatellite_point(const Vec3& ecef) {
    const double r = ecef.norm();
    const double lat = std::asin(ecef.z / r) * kRadToDeg;
    const double lon = std::atan2(ecef.y, ecef.x) * kRadToDeg;
    return {lat, lon};
}

// Normalize a longitude to [-180, 180).
inline double wrap_longitude(double lon_deg) {
    double lon = std::fmod(lon_deg + 180.0, 360.0);
    if (lon < 0.0) lon += 360.0;
    return lon - 180.0;
}

} // namespace qonstell
