#include "monopole/two_level.hpp"

#include "monopole/numerics.hpp"

#include <cmath>

namespace monopole {

Matrix hamiltonian(const TwoLevelParams& p) {
  Matrix h(2, 2);
  const double l0 = p.lambda0;
  h << Complex(0.5 * (l0 + p.point.z), 0.0),
      0.5 * Complex(p.point.x, -p.point.y),
      0.5 * Complex(p.point.x, p.point.y),
      Complex(0.5 * (l0 - p.point.z), 0.0);
  return h;
}

Vector analytic_eigvec(Band band, double theta, double phi) {
  Vector v(2);
  double c = std::cos(0.5 * theta);
  double s = std::sin(0.5 * theta);
  if (band == Band::plus) {
    v << Complex(c, 0.0), std::polar(s, phi);
  } else {
    v << -std::polar(s, -phi), Complex(c, 0.0);
  }
  return v;
}

double berry_connection_angular(Band band, double theta) {
  return band_charge(band) * (1.0 - std::cos(theta));
}

PhaseResult berry_phase_contour(Band band, const Contour& c, const Tolerances& tol) {
  c.validate(tol);
  std::vector<Vector> states;
  states.reserve(c.points.size());
  for (const auto& p : c.points) {
    if (p.r < tol.dp_exclusion)
      throw BadArgument("berry_phase_contour: contour touches the DP");
    if (pi - p.theta < tol.string_angle)
      throw StringCrossing("berry_phase_contour: sample within 1e-6 of theta = pi");
    states.push_back(analytic_eigvec(band, p.theta, p.phi));
  }
  double gamma = 0.0;
  for (std::size_t k = 0; k + 1 < states.size(); ++k)
    gamma -= std::arg(states[k].dot(states[k + 1]));  // dot() conjugates lhs
  return make_phase(gamma);
}

Vec3 string_potential(double q, const StringDirection& dir, const ParamPoint& p,
                      StringScheme scheme, const Tolerances& tol) {
  const Vec3 rv = p.vec();
  const double r = p.r;
  if (r <= 0.0) throw BadArgument("string_potential: r = 0");
  const Vec3 rxn = rv.cross(dir.n);
  const double ndotr = dir.n.dot(rv);
  if (scheme == StringScheme::dirac) {
    double den = r * (r - ndotr);
    if (std::abs(den) < tol.string_distance * r * r)
      throw OnString("string_potential: point on the Dirac string");
    return q * rxn / den;
  }
  double den = r * (r * r - ndotr * ndotr);
  if (std::abs(den) < tol.string_distance * r * r * r)
    throw OnString("string_potential: point on the Schwinger string");
  return q * ndotr * rxn / den;
}

Eigen::Matrix3d curvature_from_sum(const TwoLevelParams& p, Band band,
                                   const Tolerances& tol) {
  if (p.point.r <= tol.dp_exclusion)
    throw BadArgument("curvature_from_sum: inside the DP exclusion radius");
  EigenSystem es = eigensolve_hermitian(hamiltonian(p), tol);
  double gap = es.values[1] - es.values[0];
  if (gap < tol.near_degenerate)
    throw NearDegenerate("curvature_from_sum: eigenvalue gap < 1e-8");

  const int n = band == Band::plus ? 1 : 0;  // ascending order: minus first
  const int m = 1 - n;
  // dH/dX_a = sigma_a / 2
  Matrix dH[3];
  for (auto& d : dH) d = Matrix::Zero(2, 2);
  dH[0] << 0, 0.5, 0.5, 0;
  dH[1] << 0, Complex(0, -0.5), Complex(0, 0.5), 0;
  dH[2] << 0.5, 0, 0, -0.5;

  const Vector vn = es.vectors.col(n);
  const Vector vm = es.vectors.col(m);
  const double de2 = std::pow(es.values[m] - es.values[n], 2);

  Eigen::Matrix3d f = Eigen::Matrix3d::Zero();
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      Complex t = (vn.adjoint() * dH[a] * vm).value() *
                  (vm.adjoint() * dH[b] * vn).value();
      double fab = -2.0 * t.imag() / de2;
      f(a, b) = fab;
      f(b, a) = -fab;
    }
  return f;
}

Matrix spin_gauge_transform(double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex ep = std::polar(1.0, 0.5 * phi);
  const Complex em = std::polar(1.0, -0.5 * phi);
  Matrix u(2, 2);
  u << c * ep, s * em, -s * ep, c * em;
  return u;
}

double spin_gauge_residual(const TwoLevelParams& p) {
  Matrix u = spin_gauge_transform(p.point.theta, p.point.phi);
  Matrix diag(2, 2);
  diag << Complex(0.5 * (p.lambda0 + p.point.r), 0.0), 0.0, 0.0,
      Complex(0.5 * (p.lambda0 - p.point.r), 0.0);
  Matrix back = u.adjoint() * diag * u;
  return (back - hamiltonian(p)).cwiseAbs().maxCoeff();
}

namespace {
inline Vec3 bloch_rhs(const Vec3& s, const Vec3& r) { return s.cross(r); }
}

std::vector<Vec3> bloch_evolution(const Vec3& s0, const Vec3& r, double t_final,
                                  double dt) {
  if (dt <= 0.0) throw BadArgument("bloch_evolution: dt <= 0");
  if (s0.norm() <= 0.0) throw BadArgument("bloch_evolution: |S(0)| = 0");
  std::vector<Vec3> out;
  const auto steps = static_cast<std::size_t>(std::llround(t_final / dt));
  out.reserve(steps + 1);
  Vec3 s = s0;
  out.push_back(s);
  for (std::size_t i = 0; i < steps; ++i) {
    Vec3 k1 = bloch_rhs(s, r);
    Vec3 k2 = bloch_rhs(s + 0.5 * dt * k1, r);
    Vec3 k3 = bloch_rhs(s + 0.5 * dt * k2, r);
    Vec3 k4 = bloch_rhs(s + dt * k3, r);
    s += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.push_back(s);
  }
  return out;
}

}  // namespace monopole
