#pragma once

#include <functional>
#include <vector>

#include "monopole/types.hpp"

namespace monopole {

/// (θ,φ) plaquette grid on S² minus polar caps of angular radius theta_cap.
/// The caps are closed by their own boundary link polygons, so the total
/// plaquette sum is an exact multiple of 2π.
struct SphereGrid {
  int n_theta = 100;
  int n_phi = 200;
  double theta_cap = 1e-3;

  void validate() const;
};

using StateFn = std::function<Vector(double theta, double phi)>;

struct ChernResult {
  double flux = 0.0;              // −Σ plaquette args (≈ ∫F over the sphere)
  double chern = 0.0;             // flux / 2π, unrounded
  double integer_residual = 0.0;  // |chern − nearest integer|
};

/// Link-variable (plaquette-product) Chern integration; gauge invariant.
/// Rows are computed in parallel (OpenMP) and reduced with a fixed pairwise
/// tree, so output is bit-reproducible for any thread count.
/// Throws NonConvergent when the residual exceeds tol.chern_integer.
ChernResult chern_number(const StateFn& state, const SphereGrid& grid,
                         const Tolerances& tol = Tolerances::global());

/// Straightforward single-pass accumulation; the reference the parallel
/// kernel is tested against.
ChernResult chern_number_serial(const StateFn& state, const SphereGrid& grid,
                                const Tolerances& tol = Tolerances::global());

/// Total sphere flux of a closed-form A_φ(θ): holonomy differences over the
/// grid latitudes plus boundary-limit cap corrections (limits taken at
/// θ = ε, π−ε with ε = 1e-6).
double flux_of_connection(const std::function<double(double)>& a_phi,
                          const SphereGrid& grid);

/// Deterministic pairwise tree sum (reduction order fixed by construction).
double pairwise_sum(const std::vector<double>& values);

}  // namespace monopole
