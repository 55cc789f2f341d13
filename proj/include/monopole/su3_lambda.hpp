#pragma once

#include <boost/rational.hpp>

#include <functional>
#include <vector>

#include "monopole/types.hpp"

namespace monopole {

using Rational = boost::rational<long long>;

/// Diagonal traceless charge matrix in exact rational arithmetic (the
/// quantization conditions are exact statements).
struct ChargeMatrix {
  std::vector<Rational> diag;

  explicit ChargeMatrix(std::vector<Rational> d);
  int dim() const { return int(diag.size()); }
  Rational trace() const;
  Matrix to_matrix() const;
  bool operator==(const ChargeMatrix& o) const { return diag == o.diag; }
};

ChargeMatrix operator*(const Rational& s, const ChargeMatrix& q);

/// Λ-system control parameters: Ω_p = X+iY, Ω_c = Z+iU, one-photon detuning δ.
struct LambdaParams {
  Complex omega_p{1.0, 0.0};
  Complex omega_c{1.0, 0.0};
  double delta = 0.0;

  double rabi() const { return std::hypot(std::abs(omega_p), std::abs(omega_c)); }
  double theta() const { return 2.0 * std::atan2(std::abs(omega_p), std::abs(omega_c)); }
  double phi_p() const { return std::arg(omega_p); }
  double phi_c() const { return std::arg(omega_c); }
  double phi() const { return phi_p() - phi_c(); }
  double psi() const { return phi_p() + phi_c(); }
};

struct OamBeams {
  int l_p = 1;
  int l_c = 0;
  int l() const { return l_p - l_c; }
};

/// 3×3 coupling Hamiltonian in the (|1>, |2>, |e>) basis.
Matrix lambda_hamiltonian(const LambdaParams& p);

struct LambdaStates {
  Vector dark, bright, plus, minus;
};

/// Closed-form dark/bright/± states with the paper's phase conventions;
/// requires δ = 0 and R > 0 (ZeroField at the DP).
LambdaStates dark_bright_states(const LambdaParams& p);

/// A point of the (θ, φ_p, φ_c) chart on S³.
struct S3Point {
  double theta = pi / 2;
  double phi_p = 0.0;
  double phi_c = 0.0;
};

struct ConnectionTriplet {
  double a0 = 0.0;      // dark
  double aplus = 0.0;   // |+>
  double aminus = 0.0;  // |−>
};

/// Closed forms A0 = −½(ψ' − cosθ φ'), A± = ¼(ψ' − cosθ φ') contracted with
/// the path tangent.
ConnectionTriplet induced_connection_closed(const S3Point& x, const S3Point& dx_dt);

/// i<state|d state/dt> by central differences of the closed-form states.
/// Throws ChartSingular near θ ∈ {0, π}.
ConnectionTriplet induced_connection_numeric(const std::function<S3Point(double)>& path,
                                             double t, double h = 1e-6);

ChargeMatrix charge_matrix_basic();                 // Q0 = ½ diag(−1, ½, ½)
ChargeMatrix charge_matrix_oam(const OamBeams& b);  // Q_l = ½ diag(−l, l/2, l/2)
ChargeMatrix cartan_charge(long long n1, long long n2);       // ½ diag(n1, n2−n1, −n2)
ChargeMatrix topological_charge(long long n1, long long n2);  // ¼ diag(n1, n2−n1, −n2)

/// Q = a Γ1 + (√3/2) n2 Γ2, recovered by trace inner products. Returns
/// (a, n2): the S·R̂ coefficient and the integer-normalized hypercharge part.
struct SpinHypercharge {
  Rational spin_coeff;   // n1 − n2/2
  Rational gamma2_part;  // n2 (the Γ2 coefficient is (√3/2)·gamma2_part)
};
SpinHypercharge spin_hypercharge_decomposition(const ChargeMatrix& q);

/// Reassemble a charge from its (spin, hypercharge) coefficients; exact.
ChargeMatrix assemble_cartan(const SpinHypercharge& c);

/// 3×3 unitary U(θ,φ) recovering the spin approach.
Matrix su3_gauge_transform(double theta, double phi);

/// S·R̂ embedded in the upper 2×2 block (σ·R̂(θ,φ)/2 ⊕ 0).
Matrix embedded_spin_dot_r(double theta, double phi);

/// exp(i4πQ) = 1, i.e. all q_i of Q = −½diag(q) are integers (gauge group SU(n)).
bool su_n_quantized(const ChargeMatrix& q);

/// q_i = p/n + integer with a common p (gauge group SU(n)/Z_n). If p_out is
/// non-null it receives p mod n.
bool su_n_mod_center_quantized(const ChargeMatrix& q, long long* p_out = nullptr);

/// exp(i4πQ) evaluated exactly: entries e^{i2π·(2 diag)}.
Matrix center_element(const ChargeMatrix& q);

}  // namespace monopole
