// Legendre polynomials, real spherical harmonics on S^2 (orthonormal for the
// rotation-invariant probability measure), sphere quadrature, the zonal
// measure of S(D_3), and its multiplier operator and inverse.
#pragma once

#include <functional>
#include <vector>

#include "latpack/rational.hpp"

namespace latpack {

struct SphPoint {
  double x = 0.0, y = 0.0, z = 1.0;
};

SphPoint sph_point(double x, double y, double z);  // normalizes

// Legendre polynomial by the three-term recurrence; P_l(1) = 1 exactly.
double legendre(int l, double t);

// Exact rational value of P_l at a rational argument.
Rational legendre_exact(int l, const Rational& t);

// Multiplier coefficient c_l = 1 + 4 P_l(1/2) + P_l(0), exact and float.
Rational multiplier_c_exact(int l);
double multiplier_c(int l);

// (Q_l(0) + 4 Q_l(1/2) + Q_l(1)) mod 8 for l = 0..l_max via the integer
// recurrence of Q_l = 2^l l! P_l.
std::vector<int> legendre_q_mod8(int l_max);

// |P_l(t)| < (pi l sqrt(1-t^2)/2)^{-1/2} checked on an interior grid.
bool bernstein_check(int l, int grid_points);

// Real spherical harmonic Y_{l,m}, m in [-l, l]; int_{S^2} Y^2 dsigma = 1.
double real_sh(int l, int m, const SphPoint& p);
// All 2l+1 values of degree l at p, order m = -l..l.
void real_sh_row(int l, const SphPoint& p, double* out);

// Product Gauss-Legendre x equispaced-azimuth quadrature for sigma. Exact
// (to roundoff) for products of harmonics with total degree <= degree().
class SphereQuadrature {
 public:
  explicit SphereQuadrature(int exactness_degree);

  int degree() const { return degree_; }
  std::size_t size() const { return points_.size(); }
  const SphPoint& point(std::size_t i) const { return points_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  double integrate(const std::function<double(const SphPoint&)>& f) const;

  // Shared read-only table of at least the requested degree.
  static const SphereQuadrature& shared(int degree);

 private:
  int degree_ = 0;
  std::vector<SphPoint> points_;
  std::vector<double> weights_;
};

// Band-limited even function on S^2, stored as coefficients over even degrees.
class EvenHarmonic {
 public:
  EvenHarmonic() : EvenHarmonic(0) {}
  explicit EvenHarmonic(int bandlimit);  // even, >= 0

  int bandlimit() const { return bandlimit_; }
  double coeff(int l, int m) const { return c_[index(l, m)]; }
  double& coeff(int l, int m) { return c_[index(l, m)]; }

  double eval(const SphPoint& p) const;
  double mean() const { return c_[0]; }

  void scale(double s);
  void scale_degree(int l, double s);
  double degree_norm(int l) const;   // coefficient 2-norm of the degree block
  double coeff_norm() const;         // = L2(sigma) norm by orthonormality

  // L1(sigma) norm by quadrature.
  double l1_norm() const;

  static EvenHarmonic zero_like(const EvenHarmonic& f) { return EvenHarmonic(f.bandlimit_); }

 private:
  std::size_t index(int l, int m) const;
  int bandlimit_ = 0;
  std::vector<double> c_;
};

// Orthogonal projection onto degree l of a point function whose effective
// polynomial degree is f_degree; throws when the quadrature is too weak.
std::vector<double> project_degree(const SphereQuadrature& quad,
                                   const std::function<double(const SphPoint&)>& f,
                                   int l, int f_degree);

// Projection of all even degrees up to the band limit.
EvenHarmonic project_even(const SphereQuadrature& quad,
                          const std::function<double(const SphPoint&)>& f,
                          int bandlimit, int f_degree);

// The zonal measure of S(D_3): atoms of weight 1/2 at both poles, circles of
// weight 2 at cos(theta) = +-1/2, weight 1 on the equator; total mass 6.
struct ZonalMeasure {
  struct Atom { double cos_theta; double weight; };
  std::vector<Atom> atoms{{1.0, 0.5}, {-1.0, 0.5}};
  std::vector<Atom> circles{{0.5, 2.0}, {-0.5, 2.0}, {0.0, 1.0}};
  double total_mass() const { return 6.0; }
};

// Multiplier action of the zonal convolution: degree block l scaled by c_l.
EvenHarmonic phi_apply(const EvenHarmonic& f);

// Pointwise convolution value (mu * f)(y) via the atom/circle structure;
// circle averages use 2L+2 equispaced nodes, exact for band-limited f.
double phi_point(const EvenHarmonic& f, const SphPoint& y);

// Inverse multiplier on functions with vanishing degree-2 component.
// Throws std::domain_error when the degree-2 block is nonzero.
EvenHarmonic psi_apply(const EvenHarmonic& f);

}  // namespace latpack
