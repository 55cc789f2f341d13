#pragma once

#include <utility>

#include "monopole/floquet.hpp"
#include "monopole/types.hpp"

namespace monopole {

// ---------------------------------------------------------------------------
// Driven two-level system in the rotating-wave form,
// H(t) = diag(E1, E2) + (λ/2) (V0 e^{−iωt} |1><2| + h.c.).
// ---------------------------------------------------------------------------

struct RwaQubitParams {
  double e1 = 0.5;
  double e2 = -0.5;
  Complex v0 = 1.0;
  double lambda = 0.5;
  double omega = 1.0;

  double e0() const { return 0.5 * (e1 + e2); }
  double omega0() const { return e1 - e2; }
  double detuning() const { return omega0() - omega; }             // δ = ω0 − ω
  double rabi() const {                                            // R = √(λ²|V0|² + δ²)
    return std::hypot(lambda * std::abs(v0), detuning());
  }
  double cos_theta() const { return detuning() / rabi(); }
  bool is_diabolical(double tol = 1e-12) const { return rabi() < tol; }
};

PeriodicHamiltonian rwa_qubit(const RwaQubitParams& p);

/// ε^p_± = E0 + pω + ½(ω ± R).
double rwa_quasienergy(const RwaQubitParams& p, Band band, int zone = 0);

/// χ± = ±λ|V0|²/(2R).
double rwa_susceptibility(const RwaQubitParams& p, Band band);

/// γ± = ∓π(1 − cos θ), the band geometric phase per period (mod 2π form).
double rwa_phase(const RwaQubitParams& p, Band band);

/// Closed-form Floquet mode u^p_± sampled on M uniform ϑ points (gauge as in
/// the analytic eigenvectors); used as overlap oracle against the engine.
Matrix rwa_mode_samples(const RwaQubitParams& p, Band band, int zone, int m_samples);

/// S·R̂(ϑ) for the qubit geometry X+iY = λ|V0| e^{i(ϑ+φ0)}, Z = δ.
Matrix rwa_spin_op(const RwaQubitParams& p, double theta_t);

// ---------------------------------------------------------------------------
// Superconducting qubit + resonator (given-field regime). The full quantum
// model enters through its closed-form quasienergies; the semiclassical
// Hamiltonian feeds the generic Floquet engine.
// ---------------------------------------------------------------------------

struct QubitResonatorParams {
  double omega_q = 1.0;
  double omega_r = 1.0;
  double lambda = 0.1;
  int n = 0;            // photon index
  double alpha = 10.0;  // coherent amplitude

  double big_omega_n() const {
    return std::hypot(std::sqrt(double(n + 1)) * lambda, omega_q - omega_r);
  }
  double cos_theta_n() const { return (omega_r - omega_q) / big_omega_n(); }
  double kappa() const { return alpha * lambda; }  // effective coupling
  double big_omega_sc() const { return std::hypot(kappa(), omega_q - omega_r); }
  double cos_theta_sc() const { return (omega_r - omega_q) / big_omega_sc(); }
  bool semiclassical_regime() const { return alpha >= 5.0; }
};

/// ε±,n = (n + ½)ω_r ∓ Ω_n/2.
std::pair<double, double> qubit_resonator_quasienergies(const QubitResonatorParams& p);

/// γ±,n = ±π cos θ_n − 2π(n + ½).
std::pair<double, double> qubit_resonator_phases(const QubitResonatorParams& p);

/// Semiclassical 2×2 drive H_q with κ = αλ.
PeriodicHamiltonian qubit_resonator_semiclassical(const QubitResonatorParams& p);

/// γ = −π(1 ∓ cos θ) for the ± monopole-spin branches (semiclassical limit).
double qr_semiclassical_phase(const QubitResonatorParams& p, Band band);

/// Adiabatic (Berry) limit γ_b = −π(1 ∓ ω_q/√(κ² + ω_q²)).
double qr_berry_phase(const QubitResonatorParams& p, Band band);

/// S·R̂(ϑ) whose +½ branch is the ε₊ (lower) semiclassical state.
Matrix qr_spin_op(const QubitResonatorParams& p, double theta_t);

// ---------------------------------------------------------------------------
// Spin-j driven by a circularly polarized field.
// ---------------------------------------------------------------------------

struct SpinJParams {
  double j = 0.5;
  double omega0 = 1.0;  // μ0 B_z / j
  Complex v = 0.5;      // μ0 B⊥ e^{iφ} / j
  double omega = 1.0;

  int dim() const { return int(std::lround(2.0 * j)) + 1; }
  double delta() const { return omega0 - omega; }
  double big_omega() const { return std::hypot(delta(), std::abs(v)); }
  double cos_theta() const { return delta() / big_omega(); }
  bool is_diabolical(double tol = 1e-12) const { return big_omega() < tol; }
};

/// Angular-momentum matrices in the |j,m> basis (m ascending); axis 1..3.
Matrix angular_momentum(double j, int axis);

/// Central (2j+1)-dimensional Floquet block H_j = −jω·1 + Ω S·R̂.
Matrix spin_j_floquet_block(const SpinJParams& p);

/// Full periodic Hamiltonian (Fourier blocks of Eq-style J± couplings), for
/// the generic engine cross-check of the block reduction.
PeriodicHamiltonian spin_j_hamiltonian(const SpinJParams& p);

/// ε_m = −jω + mΩ.
double spin_j_quasienergy(const SpinJParams& p, double m);

/// γ_m = 2π(j + m cos θ).
double spin_j_phase(const SpinJParams& p, double m);

/// S·R̂(ϑ) on the (2j+1)-dimensional space.
Matrix spin_j_spin_op(const SpinJParams& p, double theta_t);

}  // namespace monopole
