#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace monopole {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// ---------------------------------------------------------------------------
// Error kinds. All computational failure modes are typed so callers (and the
// CLI exit codes) can tell a bad argument from a numerical breakdown.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct JumpTooLarge : Error { using Error::Error; };
struct BadArgument : Error { using Error::Error; };
struct DegenerateContour : Error { using Error::Error; };
struct StringCrossing : Error { using Error::Error; };
struct OnString : Error { using Error::Error; };
struct NearDegenerate : Error { using Error::Error; };
struct OriginApproach : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct CutoffTooSmall : Error { using Error::Error; };
struct ConvergenceFail : Error { using Error::Error; };
struct UnderSampled : Error { using Error::Error; };
struct BranchJump : Error { using Error::Error; };
struct ZeroField : Error { using Error::Error; };
struct ChartSingular : Error { using Error::Error; };
struct NotInCartanSpan : Error { using Error::Error; };
struct BadSpin : Error { using Error::Error; };
struct NonConvergent : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Central tolerance record. Every numerical threshold in the library reads
// from here; the CLI scales the residual-type entries with --tol-scale.
// ---------------------------------------------------------------------------

struct Tolerances {
  double hermiticity = 1e-10;      // max |M - M†| entry, relative to max(1, |M|_max)
  double unitarity = 1e-10;        // |U†U - 1|
  double degeneracy = 1e-9;        // adjacent eigenvalue gap, relative to spectral range
  double near_degenerate = 1e-8;   // curvature-sum gap guard
  double dp_exclusion = 1e-6;      // radius around a diabolical point
  double string_distance = 1e-10;  // string-potential denominator, scale-free
  double string_angle = 1e-6;      // contour angular distance from theta = pi
  double contour_radius = 1e-10;   // shared-radius check on contours
  double chart_pole = 1e-6;        // S^3 chart exclusion around theta in {0, pi}
  double cutoff_shift = 1e-8;      // Floquet spectrum drift between P and P+2
  double branch_overlap = 0.9;     // mode-overlap threshold for branch tracking (not scaled)
  double chern_integer = 1e-3;     // NonConvergent guard on link-variable results

  // Residual-type entries scaled by s (< 1 tightens); structural thresholds
  // (branch_overlap) are left alone.
  Tolerances scaled(double s) const {
    Tolerances t = *this;
    t.hermiticity *= s;
    t.unitarity *= s;
    t.degeneracy *= s;
    t.near_degenerate *= s;
    t.cutoff_shift *= s;
    t.chern_integer *= s;
    return t;
  }

  static Tolerances& global() {
    static Tolerances t;
    return t;
  }
};

// Geometric phases are reported on the branch (-2pi, 2pi): the raw line
// integral is the primitive quantity, the reduced value is what the mod-2pi
// formulas quote.
struct PhaseResult {
  double raw = 0.0;
  double reduced = 0.0;
};

inline double reduce_phase(double raw) { return std::fmod(raw, two_pi); }

inline PhaseResult make_phase(double raw) { return {raw, reduce_phase(raw)}; }

// Signed distance of a-b from the nearest multiple of 2pi; the metric used by
// every "equal mod 2pi" assertion.
inline double phase_distance(double a, double b) {
  double d = std::fmod(a - b, two_pi);
  if (d > pi) d -= two_pi;
  if (d < -pi) d += two_pi;
  return std::abs(d);
}

}  // namespace monopole
