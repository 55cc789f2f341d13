#include "monopole/floquet.hpp"

#include "monopole/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace monopole {

void PeriodicHamiltonian::validate(const Tolerances& tol) const {
  if (dim <= 0) throw BadArgument("PeriodicHamiltonian: dim <= 0");
  if (omega <= 0.0) throw BadArgument("PeriodicHamiltonian: omega <= 0");
  for (const auto& [k, b] : blocks) {
    if (b.rows() != dim || b.cols() != dim)
      throw BadArgument("PeriodicHamiltonian: block dimension mismatch");
    if (!b.allFinite())
      throw NonFinite("PeriodicHamiltonian: non-finite block");
    auto it = blocks.find(-k);
    if (it == blocks.end())
      throw NotHermitian("PeriodicHamiltonian: missing conjugate block H^(-k)");
    double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    if ((it->second - b.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw NotHermitian("PeriodicHamiltonian: H^(-k) != H^(k)†");
  }
  (void)tol;
}

int PeriodicHamiltonian::max_harmonic() const {
  int m = 0;
  for (const auto& [k, b] : blocks) m = std::max(m, std::abs(k));
  return m;
}

Matrix PeriodicHamiltonian::at(double theta) const {
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& [k, b] : blocks)
    h += b * std::polar(1.0, k * theta);
  return h;
}

Matrix build_floquet_matrix(const PeriodicHamiltonian& h, int cutoff) {
  h.validate();
  if (cutoff < h.max_harmonic())
    throw CutoffTooSmall("build_floquet_matrix: cutoff below largest harmonic");
  const int n = h.dim;
  const int zones = 2 * cutoff + 1;
  Matrix f = Matrix::Zero(zones * n, zones * n);
  for (int p = -cutoff; p <= cutoff; ++p) {
    const int rp = (p + cutoff) * n;
    f.block(rp, rp, n, n) =
        Matrix::Identity(n, n) * (double(p) * h.omega);
    for (int q = -cutoff; q <= cutoff; ++q) {
      auto it = h.blocks.find(p - q);
      if (it == h.blocks.end()) continue;
      f.block(rp, (q + cutoff) * n, n, n) += it->second;
    }
  }
  return f;
}

double fold_quasienergy(double eps, double omega) {
  double f = eps - omega * std::floor(eps / omega + 0.5);
  if (f >= 0.5 * omega) f -= omega;  // floor rounding edge
  return f;
}

std::vector<double> FloquetSpectrum::folded() const {
  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.folded);
  return out;
}

namespace {

// Mean |<a(ϑ)|b(ϑ)>| of the pointwise rays; ≈1 for zone copies of one
// physical state, ≈0 for distinct states of the shipped (frame-complete)
// models. Used only as a duplicate filter during selection.
double pointwise_ray_overlap(const Matrix& a, const Matrix& b) {
  double acc = 0.0;
  int cols = int(a.cols());
  for (int m = 0; m < cols; ++m) {
    double na = a.col(m).norm();
    double nb = b.col(m).norm();
    if (na == 0.0 || nb == 0.0) continue;
    acc += std::abs(a.col(m).dot(b.col(m))) / (na * nb);
  }
  return acc / double(cols);
}

Matrix sample_mode(const Vector& coeffs, int dim, int cutoff, int theta_samples) {
  Matrix samples = Matrix::Zero(dim, theta_samples);
  for (int m = 0; m < theta_samples; ++m) {
    double theta = two_pi * double(m) / double(theta_samples);
    Vector phi = Vector::Zero(dim);
    for (int p = -cutoff; p <= cutoff; ++p)
      phi += coeffs.segment((p + cutoff) * dim, dim) * std::polar(1.0, p * theta);
    samples.col(m) = phi;
  }
  return samples;
}

}  // namespace

FloquetSpectrum quasienergies_at_cutoff(const PeriodicHamiltonian& h, int cutoff,
                                        int theta_samples, const Tolerances& tol) {
  Matrix f = build_floquet_matrix(h, cutoff);
  EigenSystem es = eigensolve_hermitian(f, tol);
  const int n = h.dim;
  const int total = int(es.values.size());

  std::vector<double> center(total, 0.0);
  for (int i = 0; i < total; ++i) {
    double c = 0.0;
    for (int p = -cutoff; p <= cutoff; ++p)
      c += double(p) * es.vectors.col(i).segment((p + cutoff) * n, n).squaredNorm();
    center[i] = c;
  }

  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (std::abs(center[a]) != std::abs(center[b]))
      return std::abs(center[a]) < std::abs(center[b]);
    return a < b;
  });

  // Greedy pick by central concentration, skipping zone copies of states
  // already taken; falls back to plain concentration order if the filter
  // leaves fewer than N states.
  std::vector<int> selected;
  std::vector<Matrix> selected_samples;
  for (int idx : order) {
    if (int(selected.size()) == n) break;
    Matrix s = sample_mode(es.vectors.col(idx), n, cutoff, theta_samples);
    bool dup = false;
    for (const auto& t : selected_samples)
      if (pointwise_ray_overlap(s, t) > 0.5) {
        dup = true;
        break;
      }
    if (!dup) {
      selected.push_back(idx);
      selected_samples.push_back(std::move(s));
    }
  }
  for (int idx : order) {
    if (int(selected.size()) == n) break;
    if (std::find(selected.begin(), selected.end(), idx) != selected.end()) continue;
    selected.push_back(idx);
    selected_samples.push_back(sample_mode(es.vectors.col(idx), n, cutoff, theta_samples));
  }

  FloquetSpectrum spec;
  spec.omega = h.omega;
  spec.dim = n;
  spec.cutoff = cutoff;
  spec.theta_samples = theta_samples;
  for (std::size_t s = 0; s < selected.size(); ++s) {
    FloquetMode mode;
    mode.quasienergy = es.values[selected[s]];
    mode.folded = fold_quasienergy(mode.quasienergy, h.omega);
    mode.harmonic_center = center[selected[s]];
    mode.coeffs = es.vectors.col(selected[s]);
    mode.samples = std::move(selected_samples[s]);
    spec.states.push_back(std::move(mode));
  }
  std::stable_sort(spec.states.begin(), spec.states.end(),
                   [](const FloquetMode& a, const FloquetMode& b) {
                     return a.folded < b.folded;
                   });
  return spec;
}

FloquetSpectrum quasienergies(const PeriodicHamiltonian& h, int cutoff,
                              int theta_samples, const Tolerances& tol) {
  FloquetSpectrum base = quasienergies_at_cutoff(h, cutoff, theta_samples, tol);
  FloquetSpectrum check = quasienergies_at_cutoff(h, cutoff + 2, theta_samples, tol);
  auto a = base.folded();
  auto b = check.folded();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol.cutoff_shift * std::max(1.0, h.omega))
      throw ConvergenceFail("quasienergies: spectrum shifts between P and P+2");
  return base;
}

PhaseResult geometric_phase_direct(const Matrix& mode_samples) {
  const int m = int(mode_samples.cols());
  if (m < 256)
    throw BadArgument("geometric_phase_direct: need >= 256 theta samples");
  double gamma = 0.0;
  for (int k = 0; k < m; ++k) {
    Complex ov = mode_samples.col(k).dot(mode_samples.col((k + 1) % m));
    double a = std::arg(ov);
    if (std::abs(a) >= pi / 4.0)
      throw UnderSampled("geometric_phase_direct: overlap arg >= pi/4");
    gamma -= a;
  }
  return make_phase(gamma);
}

double extended_overlap(const Vector& a, const Vector& b) {
  return std::abs(a.dot(b));
}

namespace {

// Analytic continuation of one state across a parameter step: eigensolve the
// perturbed Floquet matrix and take the eigenvector with maximal
// extended-space overlap against the base coefficients.
std::pair<double, double> track_branch(const Matrix& f, const Vector& base,
                                       const Tolerances& tol) {
  EigenSystem es = eigensolve_hermitian(f, tol);
  int best = 0;
  double best_ov = -1.0;
  for (int i = 0; i < int(es.values.size()); ++i) {
    double ov = std::abs(base.dot(es.vectors.col(i)));
    if (ov > best_ov) {
      best_ov = ov;
      best = i;
    }
  }
  return {es.values[best], best_ov};
}

}  // namespace

PhaseResult geometric_phase_hf(const PeriodicHamiltonian& h,
                               const FloquetSpectrum& spectrum, int state,
                               const Tolerances& tol) {
  if (state < 0 || state >= int(spectrum.states.size()))
    throw BadArgument("geometric_phase_hf: state index out of range");
  const Vector& base = spectrum.states[state].coeffs;
  const double dw = 1e-5 * h.omega;

  PeriodicHamiltonian hp = h;
  hp.omega = h.omega + dw;
  PeriodicHamiltonian hm = h;
  hm.omega = h.omega - dw;

  auto [ep, ovp] = track_branch(build_floquet_matrix(hp, spectrum.cutoff), base, tol);
  auto [em, ovm] = track_branch(build_floquet_matrix(hm, spectrum.cutoff), base, tol);
  if (ovp < tol.branch_overlap || ovm < tol.branch_overlap)
    throw BranchJump("geometric_phase_hf: overlap continuation < 0.9");
  return make_phase(-two_pi * (ep - em) / (2.0 * dw));
}

SusceptibilityResult susceptibility(
    const std::function<PeriodicHamiltonian(double)>& family, double lambda,
    int state, int cutoff, const Tolerances& tol) {
  if (lambda < 0.0) throw BadArgument("susceptibility: lambda < 0");
  PeriodicHamiltonian h = family(lambda);
  FloquetSpectrum spec = quasienergies_at_cutoff(h, cutoff, 512, tol);
  if (state < 0 || state >= int(spec.states.size()))
    throw BadArgument("susceptibility: state index out of range");
  const Vector& base = spec.states[state].coeffs;

  const double dl = std::max(1e-6, 1e-6 * std::abs(lambda));
  auto [ep, ovp] =
      track_branch(build_floquet_matrix(family(lambda + dl), cutoff), base, tol);
  auto [em, ovm] =
      track_branch(build_floquet_matrix(family(lambda - dl), cutoff), base, tol);
  if (ovp < tol.branch_overlap || ovm < tol.branch_overlap)
    throw BranchJump("susceptibility: overlap continuation < 0.9");

  SusceptibilityResult res;
  res.chi = (ep - em) / (2.0 * dl);

  // <<Φ|λV|Φ>> computed exactly in Fourier space; V from the λ-linear family.
  PeriodicHamiltonian h1 = family(lambda + 1.0);
  const int n = h.dim;
  Complex elem = 0.0;
  for (const auto& [k, b1] : h1.blocks) {
    Matrix v = b1;
    auto it = h.blocks.find(k);
    if (it != h.blocks.end()) v -= it->second;
    if (v.cwiseAbs().maxCoeff() == 0.0) continue;
    for (int p = -cutoff; p <= cutoff; ++p) {
      int q = p - k;
      if (q < -cutoff || q > cutoff) continue;
      elem += (base.segment((p + cutoff) * n, n).adjoint() * v *
               base.segment((q + cutoff) * n, n))
                  .value();
    }
  }
  res.matrix_element = lambda * elem.real();
  return res;
}

double monopole_spin_projection(const Matrix& mode_samples,
                                const std::function<Matrix(double)>& op) {
  const int m = int(mode_samples.cols());
  double num = 0.0, den = 0.0;
  for (int k = 0; k < m; ++k) {
    double theta = two_pi * double(k) / double(m);
    num += (mode_samples.col(k).adjoint() * op(theta) * mode_samples.col(k))
               .value()
               .real();
    den += mode_samples.col(k).squaredNorm();
  }
  return num / den;
}

}  // namespace monopole
