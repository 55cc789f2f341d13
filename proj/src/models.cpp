#include "monopole/models.hpp"

#include <cmath>

namespace monopole {

// ------------------------------- RWA qubit --------------------------------

PeriodicHamiltonian rwa_qubit(const RwaQubitParams& p) {
  PeriodicHamiltonian h;
  h.dim = 2;
  h.omega = p.omega;
  Matrix h0 = Matrix::Zero(2, 2);
  h0(0, 0) = p.e1;
  h0(1, 1) = p.e2;
  Matrix hm = Matrix::Zero(2, 2);
  hm(0, 1) = 0.5 * p.lambda * p.v0;  // e^{−iωt} sector
  h.blocks[0] = h0;
  h.blocks[-1] = hm;
  h.blocks[1] = hm.adjoint();
  return h;
}

double rwa_quasienergy(const RwaQubitParams& p, Band band, int zone) {
  double sign = band == Band::plus ? 1.0 : -1.0;
  return p.e0() + double(zone) * p.omega + 0.5 * (p.omega + sign * p.rabi());
}

double rwa_susceptibility(const RwaQubitParams& p, Band band) {
  double sign = band == Band::plus ? 1.0 : -1.0;
  double a = p.lambda * std::norm(p.v0);
  return sign * a / (2.0 * p.rabi());
}

double rwa_phase(const RwaQubitParams& p, Band band) {
  double sign = band == Band::plus ? -1.0 : 1.0;
  return sign * pi * (1.0 - p.cos_theta());
}

Matrix rwa_mode_samples(const RwaQubitParams& p, Band band, int zone, int m_samples) {
  const double theta = std::acos(std::clamp(p.cos_theta(), -1.0, 1.0));
  const double phi0 = -std::arg(p.v0);  // X − iY = λ V0
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Matrix samples(2, m_samples);
  for (int m = 0; m < m_samples; ++m) {
    double t = two_pi * double(m) / double(m_samples);
    Complex winding = std::polar(1.0, zone * t);
    if (band == Band::plus) {
      samples(0, m) = winding * c;
      samples(1, m) = winding * std::polar(s, t + phi0);
    } else {
      samples(0, m) = -winding * std::polar(s, -(t + phi0));
      samples(1, m) = winding * c;
    }
  }
  return samples;
}

Matrix rwa_spin_op(const RwaQubitParams& p, double theta_t) {
  const double ct = p.cos_theta();
  const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
  const double phi0 = -std::arg(p.v0);
  Matrix op(2, 2);
  op << Complex(0.5 * ct, 0.0), 0.5 * st * std::polar(1.0, -(theta_t + phi0)),
      0.5 * st * std::polar(1.0, theta_t + phi0), Complex(-0.5 * ct, 0.0);
  return op;
}

// --------------------------- qubit + resonator -----------------------------

std::pair<double, double> qubit_resonator_quasienergies(const QubitResonatorParams& p) {
  if (p.n < 0) throw BadArgument("qubit_resonator: photon index n < 0");
  double base = (double(p.n) + 0.5) * p.omega_r;
  double half = 0.5 * p.big_omega_n();
  return {base - half, base + half};  // (ε₊,n , ε₋,n)
}

std::pair<double, double> qubit_resonator_phases(const QubitResonatorParams& p) {
  double trivial = -two_pi * (double(p.n) + 0.5);
  double geo = pi * p.cos_theta_n();
  return {trivial + geo, trivial - geo};  // (γ₊,n , γ₋,n)
}

PeriodicHamiltonian qubit_resonator_semiclassical(const QubitResonatorParams& p) {
  if (p.alpha < 1.0)
    throw BadArgument("qubit_resonator_semiclassical: alpha < 1");
  PeriodicHamiltonian h;
  h.dim = 2;
  h.omega = p.omega_r;
  Matrix h0 = Matrix::Zero(2, 2);
  h0(0, 0) = 0.5 * p.omega_q;
  h0(1, 1) = -0.5 * p.omega_q;
  Matrix hm = Matrix::Zero(2, 2);
  hm(0, 1) = 0.5 * p.kappa();
  h.blocks[0] = h0;
  h.blocks[-1] = hm;
  h.blocks[1] = hm.adjoint();
  return h;
}

double qr_semiclassical_phase(const QubitResonatorParams& p, Band band) {
  double sign = band == Band::plus ? -1.0 : 1.0;  // −π(1 ∓ cosθ)
  return -pi * (1.0 + sign * p.cos_theta_sc());
}

double qr_berry_phase(const QubitResonatorParams& p, Band band) {
  double sign = band == Band::plus ? -1.0 : 1.0;
  double c = p.omega_q / std::hypot(p.kappa(), p.omega_q);
  return -pi * (1.0 + sign * c);
}

Matrix qr_spin_op(const QubitResonatorParams& p, double theta_t) {
  // Qubit geometry with Z = ω_r − ω_q: the lower semiclassical branch (the
  // paper's ε₊) carries projection +1/2.
  const double ct = (p.omega_q - p.omega_r) / p.big_omega_sc();
  const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
  Matrix op(2, 2);
  op << Complex(-0.5 * ct, 0.0), -0.5 * st * std::polar(1.0, -theta_t),
      -0.5 * st * std::polar(1.0, theta_t), Complex(0.5 * ct, 0.0);
  return op;
}

// ---------------------------------- spin-j ---------------------------------

namespace {

void check_spin(double j) {
  double twoj = 2.0 * j;
  if (j < 0.5 || std::abs(twoj - std::round(twoj)) > 1e-12)
    throw BadSpin("spin-j: 2j must be a nonnegative integer");
}

}  // namespace

Matrix angular_momentum(double j, int axis) {
  check_spin(j);
  const int d = int(std::lround(2.0 * j)) + 1;
  Matrix jp = Matrix::Zero(d, d);  // raising operator
  for (int k = 0; k + 1 < d; ++k) {
    double m = -j + double(k);
    jp(k + 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  switch (axis) {
    case 1:
      return 0.5 * (jp + Matrix(jp.adjoint()));
    case 2:
      return Complex(0.0, -0.5) * (jp - Matrix(jp.adjoint()));
    case 3: {
      Matrix j3 = Matrix::Zero(d, d);
      for (int k = 0; k < d; ++k) j3(k, k) = -j + double(k);
      return j3;
    }
    default:
      throw BadArgument("angular_momentum: axis must be 1, 2 or 3");
  }
}

Matrix spin_j_floquet_block(const SpinJParams& p) {
  check_spin(p.j);
  const int d = p.dim();
  Matrix j3 = angular_momentum(p.j, 3);
  Matrix j1 = angular_momentum(p.j, 1);
  Matrix j2 = angular_momentum(p.j, 2);
  Matrix jp = j1 + Complex(0, 1) * j2;
  Matrix jm = j1 - Complex(0, 1) * j2;
  return -p.j * p.omega * Matrix::Identity(d, d) + p.delta() * j3 +
         0.5 * p.v * jp + 0.5 * std::conj(p.v) * jm;
}

PeriodicHamiltonian spin_j_hamiltonian(const SpinJParams& p) {
  check_spin(p.j);
  PeriodicHamiltonian h;
  h.dim = p.dim();
  h.omega = p.omega;
  Matrix j1 = angular_momentum(p.j, 1);
  Matrix j2 = angular_momentum(p.j, 2);
  Matrix jp = j1 + Complex(0, 1) * j2;
  h.blocks[0] = p.omega0 * angular_momentum(p.j, 3);
  h.blocks[-1] = 0.5 * p.v * jp;             // J₊ rides the e^{−iωt} harmonic
  h.blocks[1] = h.blocks[-1].adjoint();
  return h;
}

double spin_j_quasienergy(const SpinJParams& p, double m) {
  return -p.j * p.omega + m * p.big_omega();
}

double spin_j_phase(const SpinJParams& p, double m) {
  return two_pi * (p.j + m * p.cos_theta());
}

Matrix spin_j_spin_op(const SpinJParams& p, double theta_t) {
  Matrix j3 = angular_momentum(p.j, 3);
  Matrix j1 = angular_momentum(p.j, 1);
  Matrix j2 = angular_momentum(p.j, 2);
  Matrix jp = j1 + Complex(0, 1) * j2;
  Matrix jm = j1 - Complex(0, 1) * j2;
  Complex e = std::polar(1.0, -theta_t);
  return (p.delta() * j3 + 0.5 * p.v * e * jp + 0.5 * std::conj(p.v * e) * jm) /
         p.big_omega();
}

}  // namespace monopole
