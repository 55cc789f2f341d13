#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "monopole/types.hpp"

namespace monopole {

/// A point R = (X,Y,Z) of the control-parameter space with cached spherical
/// coordinates: r >= 0, theta in [0, pi], phi in [0, 2pi).
struct ParamPoint {
  double x = 0, y = 0, z = 0;
  double r = 0, theta = 0, phi = 0;

  ParamPoint() = default;
  ParamPoint(double x, double y, double z);
  static ParamPoint spherical(double r, double theta, double phi);

  Vec3 vec() const { return {x, y, z}; }
};

/// Closed ordered sample list on a parameter-space sphere
/// (points.front() == points.back(); samples() counts distinct points).
struct Contour {
  std::vector<ParamPoint> points;

  std::size_t samples() const { return points.empty() ? 0 : points.size() - 1; }
  double radius() const { return points.empty() ? 0.0 : points.front().r; }

  /// samples >= 16, shared radius, adjacent angular separation < pi/8.
  void validate(const Tolerances& tol = Tolerances::global()) const;
};

Contour latitude_contour(double r, double theta, std::size_t samples);
Contour reversed(const Contour& c);
Contour rotated(const Contour& c, const Eigen::Matrix3d& rot);

/// Oriented solid angle subtended by a closed contour, as the sum of
/// spherical-triangle excesses fanned from the north pole. Counterclockwise
/// viewed from +z is positive; a contour winding k times scales the result;
/// reversal flips the sign. The enclosed region is the one swept from +z, so
/// the value is defined mod 4pi under rigid rotation.
double solid_angle(const Contour& c);

nlohmann::json contour_to_json(const Contour& c);
Contour contour_from_json(const nlohmann::json& j);

}  // namespace monopole
