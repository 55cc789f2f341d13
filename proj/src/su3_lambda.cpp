#include "monopole/su3_lambda.hpp"

#include <cmath>

namespace monopole {

ChargeMatrix::ChargeMatrix(std::vector<Rational> d) : diag(std::move(d)) {
  if (diag.empty()) throw BadArgument("ChargeMatrix: empty diagonal");
  if (trace() != Rational(0))
    throw NotInCartanSpan("ChargeMatrix: trace != 0");
}

Rational ChargeMatrix::trace() const {
  Rational t(0);
  for (const auto& d : diag) t += d;
  return t;
}

Matrix ChargeMatrix::to_matrix() const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    m(i, i) = boost::rational_cast<double>(diag[i]);
  return m;
}

ChargeMatrix operator*(const Rational& s, const ChargeMatrix& q) {
  std::vector<Rational> d = q.diag;
  for (auto& e : d) e *= s;
  return ChargeMatrix(std::move(d));
}

Matrix lambda_hamiltonian(const LambdaParams& p) {
  Matrix h = Matrix::Zero(3, 3);
  h(0, 0) = -0.5 * p.delta;
  h(1, 1) = 0.5 * p.delta;
  h(2, 0) = 0.5 * p.omega_p;  // <e|H|1>
  h(2, 1) = 0.5 * p.omega_c;  // <e|H|2>
  h(0, 2) = std::conj(h(2, 0));
  h(1, 2) = std::conj(h(2, 1));
  return h;
}

LambdaStates dark_bright_states(const LambdaParams& p) {
  if (p.delta != 0.0)
    throw BadArgument("dark_bright_states: closed forms require delta = 0");
  const double r = p.rabi();
  if (r <= 0.0) throw ZeroField("dark_bright_states: R = 0 (the DP)");
  const double c = std::cos(0.5 * p.theta());
  const double s = std::sin(0.5 * p.theta());
  const double fp = p.phi_p();
  const double fc = p.phi_c();

  LambdaStates st;
  st.dark = Vector::Zero(3);
  st.dark << -std::polar(c, fc), std::polar(s, fp), Complex(0, 0);
  st.bright = Vector::Zero(3);
  st.bright << std::polar(s, -fp), std::polar(c, -fc), Complex(0, 0);
  Vector e = Vector::Zero(3);
  e(2) = 1.0;
  st.plus = (st.bright + e) / std::sqrt(2.0);
  st.minus = (st.bright - e) / std::sqrt(2.0);
  return st;
}

ConnectionTriplet induced_connection_closed(const S3Point& x, const S3Point& dx_dt) {
  double dpsi = dx_dt.phi_p + dx_dt.phi_c;
  double dphi = dx_dt.phi_p - dx_dt.phi_c;
  double base = dpsi - std::cos(x.theta) * dphi;
  return {-0.5 * base, 0.25 * base, 0.25 * base};
}

namespace {

LambdaParams chart_params(const S3Point& x) {
  LambdaParams p;
  p.omega_p = std::polar(std::sin(0.5 * x.theta), x.phi_p);
  p.omega_c = std::polar(std::cos(0.5 * x.theta), x.phi_c);
  return p;
}

}  // namespace

ConnectionTriplet induced_connection_numeric(const std::function<S3Point(double)>& path,
                                             double t, double h) {
  S3Point x = path(t);
  if (x.theta < Tolerances::global().chart_pole ||
      pi - x.theta < Tolerances::global().chart_pole)
    throw ChartSingular("induced_connection_numeric: theta near a chart pole");

  LambdaStates sp = dark_bright_states(chart_params(path(t + h)));
  LambdaStates sm = dark_bright_states(chart_params(path(t - h)));
  LambdaStates s0 = dark_bright_states(chart_params(x));

  auto num = [&](const Vector& v0, const Vector& vp, const Vector& vm) {
    Vector ds = (vp - vm) / (2.0 * h);
    // A = i<s|ds>; <s|ds> is purely imaginary for normalized states
    return -(v0.dot(ds)).imag();
  };
  return {num(s0.dark, sp.dark, sm.dark), num(s0.plus, sp.plus, sm.plus),
          num(s0.minus, sp.minus, sm.minus)};
}

ChargeMatrix charge_matrix_basic() {
  return ChargeMatrix({Rational(-1, 2), Rational(1, 4), Rational(1, 4)});
}

ChargeMatrix charge_matrix_oam(const OamBeams& b) {
  const long long l = b.l();
  return ChargeMatrix({Rational(-l, 2), Rational(l, 4), Rational(l, 4)});
}

ChargeMatrix cartan_charge(long long n1, long long n2) {
  return ChargeMatrix({Rational(n1, 2), Rational(n2 - n1, 2), Rational(-n2, 2)});
}

ChargeMatrix topological_charge(long long n1, long long n2) {
  return ChargeMatrix({Rational(n1, 4), Rational(n2 - n1, 4), Rational(-n2, 4)});
}

SpinHypercharge spin_hypercharge_decomposition(const ChargeMatrix& q) {
  if (q.dim() != 3)
    throw NotInCartanSpan("spin_hypercharge_decomposition: need su(3)");
  // q = a Γ1 + (√3/2) n2 Γ2 with Γ1 = ½diag(1,−1,0), Γ2 = diag(1,1,−2)/(2√3)
  // gives diag = (a/2 + n2/4, −a/2 + n2/4, −n2/2): invert exactly.
  Rational n2 = Rational(-2) * q.diag[2];
  Rational a = q.diag[0] - n2 / 4;
  a *= 2;
  // residual check (q must be in the Cartan span of Γ1, Γ2)
  if (q.diag[0] != a / 2 + n2 / 4 || q.diag[1] != -a / 2 + n2 / 4 ||
      q.diag[2] != -n2 / 2)
    throw NotInCartanSpan("spin_hypercharge_decomposition: residual != 0");
  return {a, n2};
}

ChargeMatrix assemble_cartan(const SpinHypercharge& c) {
  return ChargeMatrix({c.spin_coeff / 2 + c.gamma2_part / 4,
                       -c.spin_coeff / 2 + c.gamma2_part / 4,
                       -c.gamma2_part / 2});
}

Matrix su3_gauge_transform(double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex em = std::polar(1.0, -0.5 * phi);
  const Complex ep = std::polar(1.0, 0.5 * phi);
  Matrix u = Matrix::Zero(3, 3);
  u(0, 0) = c * em;
  u(0, 1) = s * ep;
  u(1, 0) = -s * em;
  u(1, 1) = c * ep;
  u(2, 2) = 1.0;
  return u;
}

Matrix embedded_spin_dot_r(double theta, double phi) {
  Matrix m = Matrix::Zero(3, 3);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  m(0, 0) = 0.5 * ct;
  m(1, 1) = -0.5 * ct;
  m(0, 1) = 0.5 * st * std::polar(1.0, -phi);
  m(1, 0) = 0.5 * st * std::polar(1.0, phi);
  return m;
}

bool su_n_quantized(const ChargeMatrix& q) {
  // Q = −½ diag(q_i): all q_i integral ⟺ every 2·diag entry is integral.
  for (const auto& d : q.diag)
    if ((Rational(2) * d).denominator() != 1) return false;
  return true;
}

bool su_n_mod_center_quantized(const ChargeMatrix& q, long long* p_out) {
  const long long n = q.dim();
  // q_i = p/n + integer: n·q_i ≡ p (mod n) with a common p; q_i = −2·diag_i.
  long long p = 0;
  bool first = true;
  for (const auto& d : q.diag) {
    Rational qi = Rational(-2) * d;
    Rational nqi = Rational(n) * qi;
    if (nqi.denominator() != 1) return false;
    long long residue = ((nqi.numerator() % n) + n) % n;
    if (first) {
      p = residue;
      first = false;
    } else if (residue != p) {
      return false;
    }
  }
  if (p_out) *p_out = p;
  return true;
}

Matrix center_element(const ChargeMatrix& q) {
  Matrix m = Matrix::Zero(q.dim(), q.dim());
  for (int i = 0; i < q.dim(); ++i) {
    double e = 2.0 * boost::rational_cast<double>(q.diag[i]);
    m(i, i) = std::polar(1.0, two_pi * e);
  }
  return m;
}

}  // namespace monopole
