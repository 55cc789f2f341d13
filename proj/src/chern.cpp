#include "monopole/chern.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>

namespace monopole {

void SphereGrid::validate() const {
  if (n_theta < 32 || n_phi < 64)
    throw BadArgument("SphereGrid: need n_theta >= 32 and n_phi >= 64");
  if (!(theta_cap > 0.0 && theta_cap < 0.5))
    throw BadArgument("SphereGrid: theta_cap out of range");
}

double pairwise_sum(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  std::vector<double> level = values;
  while (level.size() > 1) {
    std::vector<double> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2)
      next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2) next.push_back(level.back());
    level.swap(next);
  }
  return level[0];
}

namespace {

struct Lattice {
  std::vector<Vector> states;  // row-major (n_theta × n_phi)
  int nt = 0, np = 0;
  const Vector& at(int i, int j) const { return states[std::size_t(i) * np + j]; }
};

Lattice sample_states(const StateFn& state, const SphereGrid& grid, bool parallel) {
  Lattice lat;
  lat.nt = grid.n_theta;
  lat.np = grid.n_phi;
  lat.states.resize(std::size_t(lat.nt) * lat.np);
  const double span = pi - 2.0 * grid.theta_cap;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 0; i < lat.nt; ++i) {
    double theta = grid.theta_cap + span * double(i) / double(lat.nt - 1);
    for (int j = 0; j < lat.np; ++j) {
      double phi = two_pi * double(j) / double(lat.np);
      lat.states[std::size_t(i) * lat.np + j] = state(theta, phi);
    }
  }
  return lat;
}

inline double link_arg(const Vector& a, const Vector& b) {
  return std::arg(a.dot(b));
}

// One latitude row of plaquette args; the loop over each plaquette runs
// counterclockwise in (θ, φ), matching the outward dθ∧dφ orientation.
double row_args(const Lattice& lat, int i) {
  double acc = 0.0;
  for (int j = 0; j < lat.np; ++j) {
    int jn = (j + 1) % lat.np;
    Complex prod = lat.at(i, j).dot(lat.at(i + 1, j)) *
                   lat.at(i + 1, j).dot(lat.at(i + 1, jn)) *
                   lat.at(i + 1, jn).dot(lat.at(i, jn)) *
                   lat.at(i, jn).dot(lat.at(i, j));
    acc += std::arg(prod);
  }
  return acc;
}

// Boundary polygons that close the polar caps: the north one traverses the
// first ring with increasing φ, the south one the last ring with decreasing
// φ, so every link of the tiling cancels and the total is exactly 2π·integer.
// The principal arg of each ring product drops gauge-vortex windings hiding
// inside a cap, leaving only the O(θ_cap²) physical cap flux.
double cap_args(const Lattice& lat) {
  Complex north = 1.0, south = 1.0;
  for (int j = 0; j < lat.np; ++j) {
    int jn = (j + 1) % lat.np;
    north *= lat.at(0, j).dot(lat.at(0, jn));
    south *= lat.at(lat.nt - 1, jn).dot(lat.at(lat.nt - 1, j));
  }
  return std::arg(north) + std::arg(south);
}

ChernResult assemble(double total_args, const Tolerances& tol) {
  ChernResult res;
  res.flux = -total_args;
  res.chern = res.flux / two_pi;
  res.integer_residual = std::abs(res.chern - std::round(res.chern));
  if (res.integer_residual > tol.chern_integer)
    throw NonConvergent("chern_number: result not integral");
  return res;
}

}  // namespace

ChernResult chern_number(const StateFn& state, const SphereGrid& grid,
                         const Tolerances& tol) {
  grid.validate();
  Lattice lat = sample_states(state, grid, true);
  std::vector<double> rows(std::size_t(grid.n_theta) - 1, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < grid.n_theta - 1; ++i) rows[i] = row_args(lat, i);
  return assemble(pairwise_sum(rows) + cap_args(lat), tol);
}

ChernResult chern_number_serial(const StateFn& state, const SphereGrid& grid,
                                const Tolerances& tol) {
  grid.validate();
  Lattice lat = sample_states(state, grid, false);
  double acc = 0.0;
  for (int i = 0; i < grid.n_theta - 1; ++i) acc += row_args(lat, i);
  return assemble(acc + cap_args(lat), tol);
}

double flux_of_connection(const std::function<double(double)>& a_phi,
                          const SphereGrid& grid) {
  grid.validate();
  auto holonomy = [&](double theta) { return two_pi * a_phi(theta); };
  const double span = pi - 2.0 * grid.theta_cap;
  double flux = 0.0;
  double prev = holonomy(grid.theta_cap);
  for (int i = 1; i < grid.n_theta; ++i) {
    double h = holonomy(grid.theta_cap + span * double(i) / double(grid.n_theta - 1));
    flux += h - prev;  // band flux between successive latitudes
    prev = h;
  }
  // cap corrections from the boundary limits of A_φ
  const double eps = 1e-6;
  flux += holonomy(grid.theta_cap) - holonomy(eps);
  flux += holonomy(pi - eps) - holonomy(pi - grid.theta_cap);
  return flux;
}

}  // namespace monopole
