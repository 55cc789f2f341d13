#include "monopole/numerics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>

namespace monopole {

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

Vector fix_phase(const Vector& v) {
  Eigen::Index imax = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double a = std::abs(v[i]);
    if (a > best) {  // strict: first index wins ties
      best = a;
      imax = i;
    }
  }
  if (best <= 0.0) return v;
  return v * (std::conj(v[imax]) / best);
}

EigenSystem eigensolve_hermitian(const Matrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols())
    throw BadArgument("eigensolve_hermitian: matrix not square");
  if (!m.allFinite())
    throw NonFinite("eigensolve_hermitian: non-finite entries");
  if (!is_hermitian(m, tol.hermiticity))
    throw NotHermitian("eigensolve_hermitian: M != M† beyond tolerance");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
  if (solver.info() != Eigen::Success)
    throw ConvergenceFail("eigensolve_hermitian: solver did not converge");

  EigenSystem es;
  es.values = solver.eigenvalues();
  es.vectors = solver.eigenvectors();
  for (Eigen::Index c = 0; c < es.vectors.cols(); ++c)
    es.vectors.col(c) = fix_phase(es.vectors.col(c));

  const Eigen::Index n = es.values.size();
  if (n > 1) {
    double range = std::max(es.values[n - 1] - es.values[0], 1.0);
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      if (es.values[i + 1] - es.values[i] < tol.degeneracy * range)
        es.degenerate = true;
  }
  return es;
}

Matrix matrix_exp(const Matrix& m) {
  if (!m.allFinite()) throw NonFinite("matrix_exp: non-finite entries");
  return m.exp();
}

double central_diff(const std::function<double(double)>& f, double x, double h) {
  if (h <= 0.0) h = std::max(1e-6, 1e-6 * std::abs(x));
  double fp = f(x + h);
  double fm = f(x - h);
  if (!std::isfinite(fp) || !std::isfinite(fm))
    throw NonFinite("central_diff: non-finite evaluation");
  return (fp - fm) / (2.0 * h);
}

std::vector<double> unwrap_phase(const std::vector<double>& angles) {
  std::vector<double> out;
  out.reserve(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (i == 0) {
      out.push_back(angles[0]);
      continue;
    }
    double d = angles[i] - angles[i - 1];
    d -= two_pi * std::round(d / two_pi);
    if (std::abs(d) >= pi)
      throw JumpTooLarge("unwrap_phase: successive difference >= pi");
    out.push_back(out.back() + d);
  }
  return out;
}

}  // namespace monopole
