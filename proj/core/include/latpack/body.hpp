// Perturbed-ball bodies: radial and support perturbations of B^3, seeded
// generators, volume, and the quadratic-removal fixed point.
#pragma once

#include <cstdint>

#include "latpack/harmonics.hpp"
#include "latpack/linalg.hpp"

namespace latpack {

struct RadialBody {
  EvenHarmonic rho;        // r = 1 + rho
  double epsilon = 0.0;    // shell bound, |rho| <= epsilon on the grid
  bool normalized = false; // mean 1 and vanishing degree-2 component
  double max_abs_rho = 0.0;

  double radial(const SphPoint& p) const { return 1.0 + rho.eval(p); }
};

struct SupportBody {
  EvenHarmonic eta;  // h = 1 + eta
  double epsilon = 0.0;

  double support(const SphPoint& p) const { return 1.0 + eta.eval(p); }
};

// Max of |f| over the fixed dense verification grid.
double grid_max_abs(const EvenHarmonic& f);

// Validates the shell bounds (1-eps)B ⊆ K ⊆ (1+eps)B on the grid and the
// normalization flags. Throws on violation.
RadialBody make_radial_body(EvenHarmonic rho, double epsilon);

// Seeded perturbation with i.i.d. coefficients on even degrees 4..L, rescaled
// so the grid max is 0.9 * epsilon; degrees 0 and 2 vanish by construction.
RadialBody random_body(std::uint64_t seed, int bandlimit, double epsilon);
SupportBody random_support_body(std::uint64_t seed, int bandlimit, double epsilon);

double volume(const RadialBody& body);  // (4 pi / 3) \int (1+rho)^3 dsigma

struct QuadraticRemoval {
  RadialBody body;         // transformed body, mean 1, degree-2 removed
  int iterations = 0;
  double final_residual = 0.0;
  MatD transform;          // the fixed-point A (trace-free symmetric)
};

// Fixed-point removal of the degree-2 radial component by a linear image,
// followed by rescaling to mean 1. Throws when 200 iterations do not reach
// residual 1e-9.
QuadraticRemoval remove_quadratic(const RadialBody& body);

// Sampled convexity guard: no supporting-plane violation above tol across
// `directions` boundary normals. Not part of the main pipeline.
bool convexity_spot_check(const RadialBody& body, std::size_t directions, double tol);

}  // namespace latpack
