// Exact classification of symmetric unit-vector configurations: perfection,
// eutaxy, extremality, redundancy, and the constructive shrink witnesses.
//
// Everything is decided in the lattice basis, where the projection map of the
// pair with coefficients c has the exactly rational bilinear form
// (G c)(G c)^T / m. Unit-vector coordinates never enter an exact decision.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latpack/lattice.hpp"
#include "latpack/linalg.hpp"
#include "latpack/lp.hpp"
#include "latpack/rational.hpp"

namespace latpack {

class VectorConfiguration {
 public:
  // pairs: integer coefficient vectors in the basis with Gram `gram`, one per
  // +- pair, all of one exact norm. embed rows are the float basis vectors.
  VectorConfiguration(RatMatrix gram, const MatD& embed,
                      std::vector<std::vector<int>> pairs);

  std::size_t dim() const { return dim_; }
  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t vector_count() const { return 2 * pairs_.size(); }
  const RatMatrix& gram() const { return gram_; }
  const Rational& norm() const { return norm_; }
  const std::vector<std::vector<int>>& pairs() const { return pairs_; }

  // Scaled integer data: lambda * gram is integral and u_p = (lambda G) c_p.
  const BigInt& lambda() const { return lambda_; }
  const std::vector<long long>& scaled_gram() const { return gz_; }
  const std::vector<std::vector<long long>>& scaled_w() const { return u_; }

  // w_x = G c_x, exact.
  std::vector<Rational> w(std::size_t p) const;
  // Exact inner product of the unit vectors of pairs p and q (sign per stored
  // representatives): c_p^T G c_q / m.
  Rational unit_inner(std::size_t p, std::size_t q) const;
  // Float unit vector of pair p.
  const VecD& unit(std::size_t p) const { return units_[p]; }
  // The float basis rows the unit vectors were produced with.
  const MatD& embedding() const { return embed_; }

  VectorConfiguration without_pair(std::size_t p) const;
  VectorConfiguration subset(const std::vector<std::size_t>& pair_indices) const;

 private:
  std::size_t dim_ = 0;
  RatMatrix gram_;
  Rational norm_;
  BigInt lambda_;
  std::vector<long long> gz_;
  std::vector<std::vector<int>> pairs_;
  std::vector<std::vector<long long>> u_;
  std::vector<VecD> units_;
  MatD embed_;
};

// Minimal vectors of a lattice as a unit configuration (section symbols S(L)).
VectorConfiguration unit_configuration(const Lattice& lat, const MinimalVectors& mv);

enum class EutaxyClass { none, weak, semi, eutactic };

const char* to_string(EutaxyClass c);

struct ShrinkWitness {
  MatD q;             // symmetric, <x,Qx> >= 0 on S (exact), trace <= 0, Q != 0
  double alpha = 0.0; // largest power of 1/2 keeping ||T - Id|| <= 1e-2
  MatD t;             // psd_sqrt(Id + alpha Q)
  double det_t = 0.0;
  double min_stretch = 0.0;  // min over S of ||T x|| / ||x||
};

struct EutaxyReport {
  bool perfect = false;
  EutaxyClass eutaxy = EutaxyClass::none;
  bool extreme = false;
  bool minimally_extreme = false;
  std::optional<bool> redundantly_semi_eutactic;  // skipped unless requested
  std::optional<bool> redundantly_extreme;
  std::vector<Rational> coefficients;  // per-vector coefficient, one per pair
  std::optional<ShrinkWitness> witness;  // populated when not extreme
  std::uint64_t perfection_prime = 0;    // nonzero when rank certified mod p
};

struct ClassifyOptions {
  bool check_redundancy = false;
  // Redundancy by deleting one representative pair (justified by a transitive
  // automorphism group) instead of every pair.
  bool transitive = true;
  // Pair indices of a known-extreme subconfiguration; a deletion disjoint
  // from it inherits extremality without a large LP.
  std::vector<std::size_t> certificate_subset;
};

// Do the projection forms of the configuration span Sym^n? Decided by exact
// rank; configurations above 5000 pairs are certified by rank mod a recorded
// prime first, with an exact fallback when the mod-p rank is deficient.
bool is_perfect(const VectorConfiguration& cfg, std::uint64_t* prime_used = nullptr);

// Exact eutaxy class plus coefficients realizing it.
std::pair<EutaxyClass, std::vector<Rational>> eutaxy_class(const VectorConfiguration& cfg);

// Checks sum over S of (n/|S|) P_x = Id with exact rational equality.
bool verify_uniform_eutaxy(const VectorConfiguration& cfg);

// Checks sum over S of upsilon_x P_x = Id exactly for given per-pair
// coefficients (each pair carries the coefficient of both signs).
bool verify_eutaxy_coefficients(const VectorConfiguration& cfg,
                                const std::vector<Rational>& upsilon);

EutaxyReport classify(const VectorConfiguration& cfg, const ClassifyOptions& opts = {});

// Witness of Theorem-2-type shrinking for a non-extreme configuration:
// T = sqrt(Id + alpha Q) with det T < 1 and no vector of S contracted.
// Throws std::domain_error when the configuration is extreme.
ShrinkWitness shrink_witness(const VectorConfiguration& cfg);

// The unique symmetric Q with <x,Qx> = omega_x on a minimally extreme
// configuration. Asserts trace Q = sum upsilon_x omega_x to 1e-12.
MatD interpolate_symmetric(const VectorConfiguration& cfg, const VecD& omega_per_pair);

// Exact unique eutaxy coefficients of a minimally extreme configuration.
std::vector<Rational> minimally_extreme_coefficients(const VectorConfiguration& cfg);

struct ExpansionCheck {
  double lhs = 0.0;  // det T - 1
  double rhs = 0.0;  // ||T^T T - Id||
};

// Both sides of the extremal expansion inequality for an admissible T near Id.
ExpansionCheck expansion_check(const VectorConfiguration& cfg, const MatD& t);

}  // namespace latpack
