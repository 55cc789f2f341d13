#pragma once

#include <utility>
#include <vector>

#include "monopole/types.hpp"

namespace monopole {

/// Classical charged particle in the field of a monopole at the origin;
/// mu = eq is the coupling, natural units.
struct ChargedParticleState {
  Vec3 r{1, 0, 0};
  Vec3 v{0, 0, 0};
  double m = 1.0;
  double mu = 0.0;
};

struct ConservedSet {
  Vec3 J;             // m r×v − mu r̂  (conserved)
  Vec3 Lg;            // m r×v (gauge-invariant angular momentum)
  double energy;      // kinetic, the force does no work
  double cone_angle;  // theta0 with cos theta0 = mu/|J|
};

struct OrbitSample {
  double t;
  ChargedParticleState state;
};

/// Fixed-step RK4 on m r̈ = (mu/r³) r × ṙ. The state is given at t_span.first;
/// integration runs to t_span.second (backwards when second < first).
/// Throws OriginApproach if |r| < 1e-9 anywhere on the trajectory.
std::vector<OrbitSample> integrate_orbit(const ChargedParticleState& s0,
                                         std::pair<double, double> t_span,
                                         double dt);

ConservedSet conserved_quantities(const ChargedParticleState& s);

/// r(φ) = b / cos((L^g/J) φ) with L^g = m v b, J = sqrt((L^g)² + mu²).
/// Throws OutOfRange at or beyond the asymptote |φ| >= (J/L^g) pi/2.
double analytic_orbit_radius(double b, double v, double mu, double m, double phi);

/// Dirac condition 2mu = n is not enforced classically; this just reports it.
bool dirac_quantized(double mu, double tol = 1e-12);

}  // namespace monopole
