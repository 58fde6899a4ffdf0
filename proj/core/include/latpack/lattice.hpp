// Exact lattice constructions and minimal-vector enumeration.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latpack/linalg.hpp"
#include "latpack/rational.hpp"

namespace latpack {

// A lattice carries an exact rational Gram matrix (all admissibility and
// eutaxy decisions) plus a floating row-basis embedding (all S^2 geometry).
struct Lattice {
  std::string name;
  std::size_t dim = 0;
  RatMatrix gram;  // symmetric positive definite, exact
  MatD embed;      // rows are basis vectors; embed * embed^T == gram to 1e-10

  Rational det_squared() const { return det_exact(gram); }
};

struct MinimalVectors {
  Rational norm;                         // exact minimal norm m
  std::vector<std::vector<int>> coords;  // one coefficient vector per +- pair
  std::size_t count = 0;                 // including negatives, 2 * coords.size()
  double pass1_bound = 0.0;              // float upper bound that seeded pass 2
  std::uint64_t nodes = 0;               // enumeration nodes visited, both passes
};

// Root lattice A_n from its Dynkin diagram, n >= 2. Minimal norm 1.
Lattice root_a(std::size_t n);

// Root lattice D_n in the explicit integer coordinates scaled by 2^{-1/2},
// n >= 3. Minimal norm 1, d(D_n) = 2 * 2^{-n/2}.
Lattice root_d(std::size_t n);

// Root lattice E_n from its Dynkin diagram, n in {6,7,8}. Minimal norm 1.
Lattice root_e(std::size_t n);

// Leech lattice from the Golay-code congruence construction, minimal norm 1.
Lattice leech();

// Named lookup: A2..An, D3.., E6/E7/E8, Leech (case-insensitive); anything
// else is treated as a Gram-matrix file path.
Lattice lattice_by_name(const std::string& name);

// Plain-text Gram input: first line n, then n rows of n rationals; '#' starts
// a comment.
Lattice lattice_from_file(const std::string& path);
Lattice lattice_from_gram(std::string name, RatMatrix gram);

// All shortest nonzero vectors by Fincke-Pohst enumeration on the exact Gram.
// An LLL-reduced float basis drives the pruning; every norm decision is exact
// integer arithmetic. Pass 1 establishes the minimum under a float upper
// bound, pass 2 re-enumerates at the exact minimum.
MinimalVectors minimal_vectors(const Lattice& lat);

// All coefficient vectors with exact norm <= bound (pairs up to sign, the
// admissibility enumeration used by the packing constructions).
std::vector<std::vector<int>> vectors_up_to_norm(const Lattice& lat, const Rational& bound);

// Indices of the Leech minimal pairs supported on exactly two coordinates of
// the integer frame (the S(D_24)-shaped subconfiguration, 552 pairs).
std::vector<std::size_t> leech_two_coordinate_pairs(const Lattice& lat,
                                                    const MinimalVectors& mv);

}  // namespace latpack
