#include "monopole/classical_dynamics.hpp"

#include <cmath>

namespace monopole {

namespace {

struct Phase {
  Vec3 r, v;
};

Phase rhs(const Phase& s, double mu_over_m) {
  double rn = s.r.norm();
  return {s.v, mu_over_m / (rn * rn * rn) * s.r.cross(s.v)};
}

}  // namespace

std::vector<OrbitSample> integrate_orbit(const ChargedParticleState& s0,
                                         std::pair<double, double> t_span,
                                         double dt) {
  if (dt <= 0.0) throw BadArgument("integrate_orbit: dt <= 0");
  if (s0.m <= 0.0) throw BadArgument("integrate_orbit: m <= 0");
  const double span = t_span.second - t_span.first;
  const double h = span >= 0.0 ? dt : -dt;
  const auto steps = static_cast<std::size_t>(std::llround(std::abs(span) / dt));
  const double mu_over_m = s0.mu / s0.m;

  std::vector<OrbitSample> out;
  out.reserve(steps + 1);
  Phase s{s0.r, s0.v};
  double t = t_span.first;
  auto push = [&](double time, const Phase& ph) {
    if (ph.r.norm() < 1e-9)
      throw OriginApproach("integrate_orbit: |r| < 1e-9");
    out.push_back({time, {ph.r, ph.v, s0.m, s0.mu}});
  };
  push(t, s);
  for (std::size_t i = 0; i < steps; ++i) {
    Phase k1 = rhs(s, mu_over_m);
    Phase k2 = rhs({s.r + 0.5 * h * k1.r, s.v + 0.5 * h * k1.v}, mu_over_m);
    Phase k3 = rhs({s.r + 0.5 * h * k2.r, s.v + 0.5 * h * k2.v}, mu_over_m);
    Phase k4 = rhs({s.r + h * k3.r, s.v + h * k3.v}, mu_over_m);
    s.r += h / 6.0 * (k1.r + 2.0 * k2.r + 2.0 * k3.r + k4.r);
    s.v += h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
    t = t_span.first + double(i + 1) * h;
    push(t, s);
  }
  return out;
}

ConservedSet conserved_quantities(const ChargedParticleState& s) {
  double rn = s.r.norm();
  if (rn == 0.0) throw BadArgument("conserved_quantities: r = 0");
  ConservedSet c;
  c.Lg = s.m * s.r.cross(s.v);
  c.J = c.Lg - s.mu * s.r / rn;
  c.energy = 0.5 * s.m * s.v.squaredNorm();
  double jn = c.J.norm();
  c.cone_angle = jn > 0.0 ? std::acos(std::clamp(s.mu / jn, -1.0, 1.0)) : 0.0;
  return c;
}

double analytic_orbit_radius(double b, double v, double mu, double m, double phi) {
  if (b <= 0.0 || v <= 0.0 || m <= 0.0)
    throw BadArgument("analytic_orbit_radius: b, v, m must be positive");
  const double lg = m * v * b;
  const double j = std::sqrt(lg * lg + mu * mu);
  if (std::abs(phi) >= (j / lg) * pi / 2.0)
    throw OutOfRange("analytic_orbit_radius: phi beyond the asymptote");
  return b / std::cos((lg / j) * phi);
}

bool dirac_quantized(double mu, double tol) {
  return std::abs(2.0 * mu - std::round(2.0 * mu)) < tol;
}

}  // namespace monopole
