// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>

namespace uavmm {

inline constexpr double kPi = std::numbers::pi;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Right-handed cartesian position in meters, z up (z >= 0 for all network
/// nodes).
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Direction of a link seen from a transmit sector.
///
/// azimuth_offset_deg: receiver bearing minus the sector boresight, wrapped
/// to [-180, 180]. Boresight 0 points along +x, angles grow
/// counter-clockwise.
/// elevation_deg: measured from zenith, so 0 is straight up, 90 is the
/// horizon and 180 is straight down.
struct BearingAngles {
  double azimuth_offset_deg = 0.0;
  double elevation_deg = 90.0;
};

double distance3d(const Point3& a, const Point3& b);

/// Throws std::domain_error when tx and rx coincide. A receiver exactly on
/// the vertical axis of tx reports azimuth offset 0 by convention.
BearingAngles bearing_angles(const Point3& tx, double tx_azimuth_deg,
                             const Point3& rx);

}  // namespace uavmm
