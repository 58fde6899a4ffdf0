// Admissible-lattice constructions around D_3, the rotation search, and the
// perturbed-ball packing-fraction experiment.
#pragma once

#include <cstdint>
#include <vector>

#include "latpack/body.hpp"
#include "latpack/eutaxy.hpp"
#include "latpack/lattice.hpp"

namespace latpack {

// Optimal lattice packing fraction of the ball, pi / sqrt(18).
double phi_ball3();

// S(D_3) as a shared configuration (12 vectors, 6 pairs).
const VectorConfiguration& d3_configuration();
const Lattice& d3_lattice();

struct AdmissibleResult {
  MatD rotation;       // R: lattice-frame to body-frame rotation
  MatD q;              // symmetric interpolation part (lattice frame)
  MatD t;              // full linear map applied to D_3, dilation included
  double alpha = 0.0;  // dilation factor (radial construction)
  std::size_t checked_vectors = 0;
  bool admissible = false;
  VecD offender;       // violating vector when not admissible
  double det_ratio = 0.0;  // d(Lambda) / d(D_3)
  double phi_lower = 0.0;  // vol(K) / (8 d(Lambda)); support bodies use the
                           // inscribed-ball volume lower bound
};

// Support-function construction: Q interpolates eta at the rotated minimal
// directions, the lattice is the (Id+Q)-image of the rotated D_3; admissibility
// is certified by supporting half-spaces.
AdmissibleResult construct_support(const SupportBody& body, const MatD& rotation);

// Radial construction: <x,Tx> = 1 + rho at the rotated minimal directions,
// then the exact minimal dilation over all enumerated short vectors.
AdmissibleResult construct_radial(const RadialBody& body, const MatD& rotation);

struct RotationSearch {
  MatD rotation;
  double objective = 0.0;  // (1/4) sum over S(D_3) of rho at rotated directions
};

// Seeded random rotations plus axis-angle descent on the best candidates.
RotationSearch best_rotation(const RadialBody& body, std::size_t n_samples,
                             int refine_steps, std::uint64_t seed);

struct PessimumVerdict {
  std::uint64_t seed = 0;
  double l1_norm = 0.0;
  MatD rotation;
  double alpha = 0.0;
  double phi_lower = 0.0;
  double margin = 0.0;  // phi_lower - phi(B^3)
  double delta = 0.0;   // phi(B^3)/phi_lower(K) - 1, an upper bound on Delta_K
  double ratio = 0.0;   // -delta / l1_norm
  std::size_t checked_vectors = 0;
  bool admissible = false;
  bool ok = false;  // phi_lower > phi(B^3)
};

// Rotation search + radial construction + packing-fraction verdict for one
// normalized non-spherical body.
PessimumVerdict verify_pessimum(const RadialBody& body, std::size_t rotations,
                                int refine_steps, std::uint64_t search_seed);

// Uniform random rotation (quaternion method) from a seeded generator.
MatD random_rotation(std::uint64_t seed);

// Monte-Carlo average over the fiber {U : U^{-1} x0 = y} of
// sum over S(D_3) of rho(U^{-1} x), with its standard error; the exact
// multiplier identity predicts 2 Phi[rho](y).
struct FiberAverage {
  double mean = 0.0;
  double stderr_ = 0.0;
  double predicted = 0.0;  // 2 Phi[rho](y)
};
FiberAverage fiber_average(const RadialBody& body, const SphPoint& y,
                           std::size_t samples, std::uint64_t seed);

}  // namespace latpack
