#pragma once

#include <vector>

#include "monopole/parameter_space.hpp"
#include "monopole/types.hpp"

namespace monopole {

struct TwoLevelParams {
  double lambda0 = 0.0;  // trace offset
  ParamPoint point;      // R = (X, Y, Z)
};

enum class Band { plus, minus };

/// Monopole charges q± = ∓1/2 of the upper/lower band.
inline double band_charge(Band b) { return b == Band::plus ? -0.5 : 0.5; }

/// Unit direction of the vector-potential string.
struct StringDirection {
  Vec3 n;
  explicit StringDirection(const Vec3& v) : n(v) {
    if (std::abs(n.norm() - 1.0) > 1e-12)
      throw BadArgument("StringDirection: |n| != 1");
  }
};

enum class StringScheme { dirac, schwinger };

/// ½ [[λ0+Z, X−iY], [X+iY, λ0−Z]].
Matrix hamiltonian(const TwoLevelParams& p);

/// |u+> = (cos θ/2, e^{iφ} sin θ/2), |u−> = (−e^{−iφ} sin θ/2, cos θ/2).
Vector analytic_eigvec(Band band, double theta, double phi);

/// Coefficient A_φ of dφ: q±(1 − cos θ).
double berry_connection_angular(Band band, double theta);

/// Holonomy of the band connection along a closed contour, accumulated as
/// −Σ arg<u(k)|u(k+1)> (gauge-covariant overlap products). Raw value plus the
/// (−2pi, 2pi) branch. Throws StringCrossing near θ = pi.
PhaseResult berry_phase_contour(Band band, const Contour& c,
                                const Tolerances& tol = Tolerances::global());

/// Monopole vector potential with a string along n:
///   dirac:     q (R×n) / (r (r − n·R))
///   schwinger: q (n·R)(R×n) / (r (r² − (n·R)²))
Vec3 string_potential(double q, const StringDirection& n, const ParamPoint& p,
                      StringScheme scheme,
                      const Tolerances& tol = Tolerances::global());

/// Band curvature F_ab from the sum over the other band,
/// F_ab = −2 Im Σ_{m≠n} <n|∂_a H|m><m|∂_b H|n> / (E_m−E_n)², using the
/// numerical eigensolver. Equals q± ε_abc R^c / r³.
Eigen::Matrix3d curvature_from_sum(const TwoLevelParams& p, Band band,
                                   const Tolerances& tol = Tolerances::global());

/// The 2×2 gauge rotation U(θ,φ) of the spin formulation; satisfies
/// U† (λ0/2 + R S3) U = hamiltonian.
Matrix spin_gauge_transform(double theta, double phi);

/// Largest residual of the gauge relation above at the given parameters.
double spin_gauge_residual(const TwoLevelParams& p);

/// RK4 integration of dS/dt = S × R; returns the trajectory including t = 0.
std::vector<Vec3> bloch_evolution(const Vec3& s0, const Vec3& r, double t_final,
                                  double dt);

}  // namespace monopole
