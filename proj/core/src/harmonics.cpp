#include "latpack/harmonics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace latpack {

namespace {
constexpr double kPi = std::numbers::pi;
}

SphPoint sph_point(double x, double y, double z) {
  double n = std::sqrt(x * x + y * y + z * z);
  if (n == 0.0) throw std::invalid_argument("sph_point: zero vector");
  return {x / n, y / n, z / n};
}

double legendre(int l, double t) {
  if (l < 0) throw std::invalid_argument("legendre: negative degree");
  double p0 = 1.0;
  if (l == 0) return p0;
  double p1 = t;
  for (int k = 1; k < l; ++k) {
    double p2 = ((2.0 * k + 1.0) * t * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

Rational legendre_exact(int l, const Rational& t) {
  if (l < 0) throw std::invalid_argument("legendre_exact: negative degree");
  Rational p0(1);
  if (l == 0) return p0;
  Rational p1 = t;
  for (int k = 1; k < l; ++k) {
    Rational p2 = (Rational(2 * k + 1) * t * p1 - Rational(k) * p0) / Rational(k + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

Rational multiplier_c_exact(int l) {
  return Rational(1) + Rational(4) * legendre_exact(l, Rational(1, 2)) +
         legendre_exact(l, Rational(0));
}

double multiplier_c(int l) { return 1.0 + 4.0 * legendre(l, 0.5) + legendre(l, 0.0); }

std::vector<int> legendre_q_mod8(int l_max) {
  if (l_max < 0) throw std::invalid_argument("legendre_q_mod8: negative bound");
  // Q_{l+1}(t) = 2(2l+1) t Q_l(t) - 4 l^2 Q_{l-1}(t) at t = 0, 1/2, 1 is an
  // integer recurrence; everything reduces mod 8.
  auto mod8 = [](long v) { return static_cast<int>(((v % 8) + 8) % 8); };
  long q0_prev = 1, qh_prev = 1, q1_prev = 1;  // Q_0
  long q0 = 0, qh = 1, q1 = 2;                 // Q_1 = 2t
  std::vector<int> out;
  out.push_back(mod8(1 + 4 * 1 + 1));  // l = 0
  if (l_max >= 1) out.push_back(mod8(q0 + 4 * qh + q1));
  for (int l = 1; l < l_max; ++l) {
    long f = 4L * l * l % 8;
    long n0 = mod8(-f * q0_prev);               // t = 0: 2t = 0
    long nh = mod8((2L * l + 1) * qh - f * qh_prev);  // t = 1/2: 2t = 1
    long n1 = mod8(2L * (2L * l + 1) * q1 - f * q1_prev);
    q0_prev = q0; qh_prev = qh; q1_prev = q1;
    q0 = n0; qh = nh; q1 = n1;
    out.push_back(mod8(q0 + 4 * qh + q1));
  }
  return out;
}

bool bernstein_check(int l, int grid_points) {
  if (l < 1 || grid_points < 1) throw std::invalid_argument("bernstein_check: bad arguments");
  for (int k = 0; k < grid_points; ++k) {
    double t = -1.0 + 2.0 * (k + 0.5) / grid_points;
    double lim = 1.0 / std::sqrt(kPi * l * std::sqrt(1.0 - t * t) / 2.0);
    if (!(std::fabs(legendre(l, t)) < lim)) return false;
  }
  return true;
}

namespace {

// Associated Legendre P_l^m(t) for m <= l, positive convention.
double assoc_legendre(int l, int m, double t) {
  double somx2 = std::sqrt(std::max(0.0, 1.0 - t * t));
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i) pmm *= (2.0 * i - 1.0) * somx2;
  if (l == m) return pmm;
  double pmmp1 = t * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = ((2.0 * ll - 1.0) * t * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

double sh_norm_factor(int l, int m) {
  // sqrt(2 (2l+1) (l-m)!/(l+m)!) for m > 0, sqrt(2l+1) for m = 0.
  if (m == 0) return std::sqrt(2.0 * l + 1.0);
  double ratio = 1.0;
  for (int k = l - m + 1; k <= l + m; ++k) ratio /= k;
  return std::sqrt(2.0 * (2.0 * l + 1.0) * ratio);
}

}  // namespace

double real_sh(int l, int m, const SphPoint& p) {
  if (l < 0 || std::abs(m) > l) throw std::invalid_argument("real_sh: bad (l,m)");
  double t = p.z;
  if (m == 0) return sh_norm_factor(l, 0) * legendre(l, t);
  int ma = std::abs(m);
  double rxy = std::hypot(p.x, p.y);
  double cphi = 1.0, sphi = 0.0;
  if (rxy > 0.0) {
    cphi = p.x / rxy;
    sphi = p.y / rxy;
  }
  // cos(m phi), sin(m phi) by the angle-addition recurrence.
  double cm = cphi, sm = sphi;
  for (int k = 1; k < ma; ++k) {
    double c2 = cm * cphi - sm * sphi;
    double s2 = sm * cphi + cm * sphi;
    cm = c2;
    sm = s2;
  }
  double base = sh_norm_factor(l, ma) * assoc_legendre(l, ma, t);
  return base * (m > 0 ? cm : sm);
}

void real_sh_row(int l, const SphPoint& p, double* out) {
  for (int m = -l; m <= l; ++m) out[m + l] = real_sh(l, m, p);
}

namespace {

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < n; ++k) {
        double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

}  // namespace

SphereQuadrature::SphereQuadrature(int exactness_degree) {
  if (exactness_degree < 0) throw std::invalid_argument("SphereQuadrature: bad degree");
  degree_ = exactness_degree;
  int n_t = exactness_degree / 2 + 1;
  int n_phi = exactness_degree + 1;
  std::vector<double> nodes, weights;
  gauss_legendre(n_t, nodes, weights);
  points_.reserve(static_cast<std::size_t>(n_t) * n_phi);
  weights_.reserve(points_.capacity());
  for (int i = 0; i < n_t; ++i) {
    double ct = nodes[i];
    double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    double w = weights[i] / 2.0 / n_phi;
    for (int j = 0; j < n_phi; ++j) {
      double phi = 2.0 * kPi * j / n_phi;
      points_.push_back({st * std::cos(phi), st * std::sin(phi), ct});
      weights_.push_back(w);
    }
  }
}

double SphereQuadrature::integrate(const std::function<double(const SphPoint&)>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) s += weights_[i] * f(points_[i]);
  return s;
}

const SphereQuadrature& SphereQuadrature::shared(int degree) {
  static std::mutex mu;
  static std::map<int, SphereQuadrature> cache;
  // Round up so nearby requests share a table.
  int d = ((degree + 7) / 8) * 8;
  std::scoped_lock lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, SphereQuadrature(d)).first;
  return it->second;
}

EvenHarmonic::EvenHarmonic(int bandlimit) : bandlimit_(bandlimit) {
  if (bandlimit < 0 || bandlimit % 2 != 0)
    throw std::invalid_argument("EvenHarmonic: band limit must be even and nonnegative");
  std::size_t total = 0;
  for (int l = 0; l <= bandlimit; l += 2) total += 2 * l + 1;
  c_.assign(total, 0.0);
}

std::size_t EvenHarmonic::index(int l, int m) const {
  if (l < 0 || l > bandlimit_ || l % 2 != 0 || std::abs(m) > l)
    throw std::out_of_range("EvenHarmonic: bad (l,m)");
  std::size_t off = 0;
  for (int k = 0; k < l; k += 2) off += 2 * k + 1;
  return off + static_cast<std::size_t>(m + l);
}

double EvenHarmonic::eval(const SphPoint& p) const {
  double s = 0.0;
  std::vector<double> row(2 * bandlimit_ + 1);
  std::size_t off = 0;
  for (int l = 0; l <= bandlimit_; l += 2) {
    real_sh_row(l, p, row.data());
    for (int m = -l; m <= l; ++m) s += c_[off + m + l] * row[m + l];
    off += 2 * l + 1;
  }
  return s;
}

void EvenHarmonic::scale(double s) {
  for (auto& x : c_) x *= s;
}

void EvenHarmonic::scale_degree(int l, double s) {
  for (int m = -l; m <= l; ++m) c_[index(l, m)] *= s;
}

double EvenHarmonic::degree_norm(int l) const {
  if (l > bandlimit_ || l % 2 != 0) return 0.0;
  double s = 0.0;
  for (int m = -l; m <= l; ++m) {
    double v = coeff(l, m);
    s += v * v;
  }
  return std::sqrt(s);
}

double EvenHarmonic::coeff_norm() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return std::sqrt(s);
}

double EvenHarmonic::l1_norm() const {
  const auto& q = SphereQuadrature::shared(2 * bandlimit_ + 8);
  return q.integrate([this](const SphPoint& p) { return std::fabs(eval(p)); });
}

std::vector<double> project_degree(const SphereQuadrature& quad,
                                   const std::function<double(const SphPoint&)>& f,
                                   int l, int f_degree) {
  if (quad.degree() < f_degree + l)
    throw std::invalid_argument("project_degree: quadrature exactness too low");
  std::vector<double> out(2 * l + 1, 0.0);
  std::vector<double> row(2 * l + 1);
  for (std::size_t i = 0; i < quad.size(); ++i) {
    double fv = f(quad.point(i)) * quad.weight(i);
    real_sh_row(l, quad.point(i), row.data());
    for (int m = -l; m <= l; ++m) out[m + l] += fv * row[m + l];
  }
  return out;
}

EvenHarmonic project_even(const SphereQuadrature& quad,
                          const std::function<double(const SphPoint&)>& f,
                          int bandlimit, int f_degree) {
  if (quad.degree() < f_degree + bandlimit)
    throw std::invalid_argument("project_even: quadrature exactness too low");
  EvenHarmonic out(bandlimit);
  std::vector<double> row(2 * bandlimit + 1);
  for (std::size_t i = 0; i < quad.size(); ++i) {
    double fv = f(quad.point(i)) * quad.weight(i);
    for (int l = 0; l <= bandlimit; l += 2) {
      real_sh_row(l, quad.point(i), row.data());
      for (int m = -l; m <= l; ++m) out.coeff(l, m) += fv * row[m + l];
    }
  }
  return out;
}

EvenHarmonic phi_apply(const EvenHarmonic& f) {
  EvenHarmonic out = f;
  for (int l = 0; l <= f.bandlimit(); l += 2) out.scale_degree(l, multiplier_c(l));
  return out;
}

double phi_point(const EvenHarmonic& f, const SphPoint& y) {
  ZonalMeasure mu;
  double s = 0.0;
  for (const auto& atom : mu.atoms) {
    SphPoint p{atom.cos_theta * y.x, atom.cos_theta * y.y, atom.cos_theta * y.z};
    s += atom.weight * f.eval(p);
  }
  // Orthonormal frame perpendicular to y.
  double ax = std::fabs(y.x), ay = std::fabs(y.y), az = std::fabs(y.z);
  SphPoint a = ax <= ay && ax <= az ? SphPoint{1, 0, 0}
             : ay <= az             ? SphPoint{0, 1, 0}
                                    : SphPoint{0, 0, 1};
  double e1x = y.y * a.z - y.z * a.y;
  double e1y = y.z * a.x - y.x * a.z;
  double e1z = y.x * a.y - y.y * a.x;
  double n1 = std::sqrt(e1x * e1x + e1y * e1y + e1z * e1z);
  e1x /= n1; e1y /= n1; e1z /= n1;
  double e2x = y.y * e1z - y.z * e1y;
  double e2y = y.z * e1x - y.x * e1z;
  double e2z = y.x * e1y - y.y * e1x;

  int nodes = 2 * f.bandlimit() + 2;
  for (const auto& circ : mu.circles) {
    double ct = circ.cos_theta;
    double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    double avg = 0.0;
    for (int k = 0; k < nodes; ++k) {
      double ang = 2.0 * kPi * k / nodes;
      double dx = std::cos(ang), dy = std::sin(ang);
      SphPoint p{ct * y.x + st * (dx * e1x + dy * e2x),
                 ct * y.y + st * (dx * e1y + dy * e2y),
                 ct * y.z + st * (dx * e1z + dy * e2z)};
      avg += f.eval(p);
    }
    s += circ.weight * avg / nodes;
  }
  return s;
}

EvenHarmonic psi_apply(const EvenHarmonic& f) {
  if (f.bandlimit() >= 2 && f.degree_norm(2) > 1e-12 * std::max(1.0, f.coeff_norm()))
    throw std::domain_error("psi_apply: nonzero degree-2 component");
  EvenHarmonic out = f;
  for (int l = 0; l <= f.bandlimit(); l += 2) {
    if (l == 2) {
      out.scale_degree(2, 0.0);
      continue;
    }
    out.scale_degree(l, 1.0 / multiplier_c(l));
  }
  return out;
}

}  // namespace latpack
