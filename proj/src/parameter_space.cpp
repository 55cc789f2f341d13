#include "monopole/parameter_space.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace monopole {

ParamPoint::ParamPoint(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
  r = std::sqrt(x * x + y * y + z * z);
  theta = (r > 0.0) ? std::acos(std::clamp(z / r, -1.0, 1.0)) : 0.0;
  phi = std::atan2(y, x);
  if (phi < 0.0) phi += two_pi;
  if (r == 0.0) phi = 0.0;
}

ParamPoint ParamPoint::spherical(double r, double theta, double phi) {
  return ParamPoint(r * std::sin(theta) * std::cos(phi),
                    r * std::sin(theta) * std::sin(phi), r * std::cos(theta));
}

void Contour::validate(const Tolerances& tol) const {
  if (samples() < 16) throw BadArgument("Contour: fewer than 16 samples");
  const ParamPoint& first = points.front();
  const ParamPoint& last = points.back();
  if ((first.vec() - last.vec()).norm() > tol.contour_radius * std::max(1.0, first.r))
    throw BadArgument("Contour: not closed (last != first)");
  double r0 = first.r;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (std::abs(points[i].r - r0) > 1e-10 * std::max(1.0, r0))
      throw BadArgument("Contour: points do not share a radius");
    Vec3 a = points[i].vec() / points[i].r;
    Vec3 b = points[i + 1].vec() / points[i + 1].r;
    double sep = std::acos(std::clamp(a.dot(b), -1.0, 1.0));
    // epsilon keeps the boundary case (16 equator samples) legal
    if (sep > pi / 8.0 * (1.0 + 1e-9))
      throw BadArgument("Contour: adjacent angular separation >= pi/8");
  }
}

Contour latitude_contour(double r, double theta, std::size_t samples) {
  if (r <= 0.0) throw BadArgument("latitude_contour: r <= 0");
  if (!(theta > 0.0 && theta < pi))
    throw BadArgument("latitude_contour: theta must lie in (0, pi)");
  if (samples < 16) throw BadArgument("latitude_contour: samples < 16");
  Contour c;
  c.points.reserve(samples + 1);
  for (std::size_t k = 0; k <= samples; ++k) {
    double phi = two_pi * double(k % samples) / double(samples);
    c.points.push_back(ParamPoint::spherical(r, theta, phi));
  }
  return c;
}

Contour reversed(const Contour& c) {
  Contour out;
  out.points.assign(c.points.rbegin(), c.points.rend());
  return out;
}

Contour rotated(const Contour& c, const Eigen::Matrix3d& rot) {
  Contour out;
  out.points.reserve(c.points.size());
  for (const auto& p : c.points) {
    Vec3 v = rot * p.vec();
    out.points.emplace_back(v.x(), v.y(), v.z());
  }
  return out;
}

namespace {

// Signed solid angle of the spherical triangle (a, b, c) on the unit sphere,
// Van Oosterom-Strackee form. Positive when (a,b,c) is counterclockwise seen
// from outside.
double triangle_excess(const Vec3& a, const Vec3& b, const Vec3& c) {
  double num = a.dot(b.cross(c));
  double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

}  // namespace

double solid_angle(const Contour& c) {
  c.validate();
  const Vec3 north(0.0, 0.0, 1.0);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
    Vec3 a = c.points[i].vec() / c.points[i].r;
    Vec3 b = c.points[i + 1].vec() / c.points[i + 1].r;
    if ((a - b).norm() < 1e-14)
      throw DegenerateContour("solid_angle: consecutive points coincide");
    total += triangle_excess(north, a, b);
  }
  return total;
}

nlohmann::json contour_to_json(const Contour& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : c.points) arr.push_back({p.x, p.y, p.z});
  return arr;
}

Contour contour_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw BadArgument("contour_from_json: expected array of [x,y,z]");
  Contour c;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3)
      throw BadArgument("contour_from_json: expected [x,y,z] triples");
    c.points.emplace_back(e[0].get<double>(), e[1].get<double>(), e[2].get<double>());
  }
  return c;
}

}  // namespace monopole
