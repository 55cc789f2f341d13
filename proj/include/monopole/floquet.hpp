#pragma once

#include <functional>
#include <map>
#include <vector>

#include "monopole/types.hpp"

namespace monopole {

/// H(t) = Σ_k H^{(k)} e^{i k ω t} with finitely many blocks;
/// Hermiticity of H(t) requires H^{(−k)} = (H^{(k)})†.
struct PeriodicHamiltonian {
  int dim = 0;
  std::map<int, Matrix> blocks;
  double omega = 1.0;

  void validate(const Tolerances& tol = Tolerances::global()) const;
  int max_harmonic() const;
  Matrix at(double theta) const;  // H(ϑ)
};

/// (2P+1)N×(2P+1)N truncation of H_F = H − iω ∂/∂ϑ in a Fourier basis:
/// block (p, q) = H^{(p−q)} + p ω δ_pq. Throws CutoffTooSmall.
Matrix build_floquet_matrix(const PeriodicHamiltonian& h, int cutoff);

struct FloquetMode {
  double quasienergy = 0.0;      // unfolded representative (raw eigenvalue)
  double folded = 0.0;           // in [−ω/2, ω/2)
  double harmonic_center = 0.0;  // Σ_p p ||c_p||²
  Vector coeffs;                 // (2P+1)·N eigenvector (harmonic blocks)
  Matrix samples;                // N × M, Φ(ϑ_m) at uniform ϑ
};

struct FloquetSpectrum {
  double omega = 0.0;
  int dim = 0;
  int cutoff = 0;
  int theta_samples = 0;
  std::vector<FloquetMode> states;  // N physical states, sorted by folded ε

  std::vector<double> folded() const;
};

double fold_quasienergy(double eps, double omega);

/// Eigen-decomposition of the truncated Floquet matrix; N physical states are
/// selected by central-harmonic concentration (with a pointwise-ray duplicate
/// filter) and folded. Throws ConvergenceFail when the folded spectrum shifts
/// by more than tol.cutoff_shift between cutoffs P and P+2.
FloquetSpectrum quasienergies(const PeriodicHamiltonian& h, int cutoff,
                              int theta_samples = 512,
                              const Tolerances& tol = Tolerances::global());

/// Like quasienergies() but without the P vs P+2 stability check.
FloquetSpectrum quasienergies_at_cutoff(const PeriodicHamiltonian& h, int cutoff,
                                        int theta_samples = 512,
                                        const Tolerances& tol = Tolerances::global());

/// γ_ε = i∮<Φ|∂_ϑ Φ> dϑ via discrete overlap products around ϑ ∈ [0, 2π).
/// Throws UnderSampled when an adjacent overlap argument reaches π/4.
PhaseResult geometric_phase_direct(const Matrix& mode_samples);

/// γ_ε = −2π ∂ε/∂ω with the branch continued by maximal extended-space mode
/// overlap (threshold tol.branch_overlap, else BranchJump). Step 1e-5·ω.
PhaseResult geometric_phase_hf(const PeriodicHamiltonian& h,
                               const FloquetSpectrum& spectrum, int state,
                               const Tolerances& tol = Tolerances::global());

struct SusceptibilityResult {
  double chi = 0.0;             // ∂ε/∂λ of the tracked branch
  double matrix_element = 0.0;  // <<Φ|λV|Φ>> (should equal λ·chi)
};

/// χ = ∂ε/∂λ by central differences on the tracked branch of a λ-linear
/// family, plus the matrix-element side of the Hellmann–Feynman identity.
SusceptibilityResult susceptibility(
    const std::function<PeriodicHamiltonian(double)>& family, double lambda,
    int state, int cutoff, const Tolerances& tol = Tolerances::global());

/// <Φ|op(ϑ)|Φ> averaged over ϑ (normalized by the mode's sampled norm).
double monopole_spin_projection(const Matrix& mode_samples,
                                const std::function<Matrix(double)>& op);

/// |<<a|b>>| of two coefficient vectors in the extended space.
double extended_overlap(const Vector& a, const Vector& b);

}  // namespace monopole
