#pragma once

#include <functional>
#include <vector>

#include "monopole/types.hpp"

namespace monopole {

/// Hermitian eigendecomposition with a deterministic eigenvector gauge.
struct EigenSystem {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // orthonormal columns, phase-fixed
  bool degenerate = false; // some adjacent gap below the degeneracy threshold
};

bool is_hermitian(const Matrix& m, double tol);

/// Phase convention: the largest-magnitude component of each eigenvector is
/// made real and nonnegative, so connection integrals are reproducible.
Vector fix_phase(const Vector& v);

/// Throws NotHermitian; sets `degenerate` when an adjacent gap falls below
/// tol.degeneracy relative to the spectral range (the phase fix is then
/// ambiguous and callers near diabolical points must handle it).
EigenSystem eigensolve_hermitian(const Matrix& m,
                                 const Tolerances& tol = Tolerances::global());

/// Scaling-and-squaring matrix exponential; total on finite input.
Matrix matrix_exp(const Matrix& m);

/// (f(x+h) - f(x-h)) / 2h. h <= 0 selects the default max(1e-6, 1e-6|x|).
double central_diff(const std::function<double(double)>& f, double x, double h = 0.0);

/// Continuous branch through a sampled angle sequence; first element kept.
/// Throws JumpTooLarge when a successive difference reaches pi after mod-2pi
/// reduction (an under-sampled contour).
std::vector<double> unwrap_phase(const std::vector<double>& angles);

}  // namespace monopole
