#include "latpack/pessimum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace latpack {

double phi_ball3() { return M_PI / std::sqrt(18.0); }

const Lattice& d3_lattice() {
  static const Lattice lat = root_d(3);
  return lat;
}

const VectorConfiguration& d3_configuration() {
  static const VectorConfiguration cfg = [] {
    const Lattice& lat = d3_lattice();
    return unit_configuration(lat, minimal_vectors(lat));
  }();
  return cfg;
}

namespace {

double gaussian(std::mt19937_64& rng) {
  double u1 = (static_cast<double>(rng() >> 11) + 1.0) / 9007199254740993.0;
  double u2 = static_cast<double>(rng() >> 11) / 9007199254740992.0;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

MatD rotation_from_quaternion(double w, double x, double y, double z) {
  double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n; x /= n; y /= n; z /= n;
  MatD r(3, 3);
  r.at(0, 0) = 1 - 2 * (y * y + z * z);
  r.at(0, 1) = 2 * (x * y - z * w);
  r.at(0, 2) = 2 * (x * z + y * w);
  r.at(1, 0) = 2 * (x * y + z * w);
  r.at(1, 1) = 1 - 2 * (x * x + z * z);
  r.at(1, 2) = 2 * (y * z - x * w);
  r.at(2, 0) = 2 * (x * z - y * w);
  r.at(2, 1) = 2 * (y * z + x * w);
  r.at(2, 2) = 1 - 2 * (x * x + y * y);
  return r;
}

MatD random_rotation_from(std::mt19937_64& rng) {
  double w = gaussian(rng), x = gaussian(rng), y = gaussian(rng), z = gaussian(rng);
  return rotation_from_quaternion(w, x, y, z);
}

MatD axis_rotation(int axis, double angle) {
  MatD r = MatD::identity(3);
  int a = (axis + 1) % 3, b = (axis + 2) % 3;
  double c = std::cos(angle), s = std::sin(angle);
  r.at(a, a) = c; r.at(a, b) = -s;
  r.at(b, a) = s; r.at(b, b) = c;
  return r;
}

// (1/4) sum over S(D_3) of rho at the rotated directions (pairs carry both
// signs of an even function).
double rotation_objective(const RadialBody& body, const MatD& rot) {
  const auto& cfg = d3_configuration();
  double s = 0.0;
  for (std::size_t p = 0; p < cfg.pair_count(); ++p) {
    VecD rx = mat_vec(rot, cfg.unit(p));
    s += 2.0 * body.rho.eval(sph_point(rx[0], rx[1], rx[2]));
  }
  return 0.25 * s;
}

// Rotation mapping the pole to v.
MatD rotation_to(const SphPoint& v) {
  // Rodrigues rotation taking (0,0,1) to v.
  double c = v.z;
  double ax = -v.y, ay = v.x;  // axis = p x v (unnormalized), p = e_z
  double s2 = ax * ax + ay * ay;
  MatD r = MatD::identity(3);
  if (s2 < 1e-30) {
    if (c < 0) {  // v == -p: rotate by pi about the x axis
      r.at(1, 1) = -1;
      r.at(2, 2) = -1;
    }
    return r;
  }
  double s = std::sqrt(s2);
  double axn = ax / s, ayn = ay / s;
  double sin_t = s >= 1.0 ? 1.0 : s;
  // Use exact cos from v.z; sin(theta) = |p x v|.
  double k = (1.0 - c);
  // Rodrigues with axis (axn, ayn, 0).
  r.at(0, 0) = c + axn * axn * k;
  r.at(0, 1) = axn * ayn * k;
  r.at(0, 2) = ayn * sin_t;
  r.at(1, 0) = axn * ayn * k;
  r.at(1, 1) = c + ayn * ayn * k;
  r.at(1, 2) = -axn * sin_t;
  r.at(2, 0) = -ayn * sin_t;
  r.at(2, 1) = axn * sin_t;
  r.at(2, 2) = c;
  return r;
}

struct ShortVectors {
  std::vector<std::vector<int>> pairs;  // D_3 coefficient vectors
};

// Short vectors of D_3 with a margin: the only shell at or below norm 3/2 is
// the minimal one (the next sits at norm 2), so small perturbations cannot
// pull new vectors into the admissibility window.
const ShortVectors& d3_short_vectors() {
  static const ShortVectors sv = [] {
    ShortVectors s;
    s.pairs = vectors_up_to_norm(d3_lattice(), Rational(3, 2));
    return s;
  }();
  return sv;
}

}  // namespace

MatD random_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_rotation_from(rng);
}

AdmissibleResult construct_support(const SupportBody& body, const MatD& rotation) {
  if (body.epsilon > 0.01)
    throw std::invalid_argument("construct_support: requires epsilon <= 0.01");
  const double eta_max = grid_max_abs(body.eta);
  if (eta_max >= 1.0)
    throw std::invalid_argument("construct_support: support function not positive");
  if (eta_max > body.epsilon)
    throw std::invalid_argument("construct_support: body leaves the (1+eps) shell");
  const auto& cfg = d3_configuration();
  const std::size_t np = cfg.pair_count();

  VecD omega(np, 0.0);
  for (std::size_t p = 0; p < np; ++p) {
    VecD rx = mat_vec(rotation, cfg.unit(p));
    omega[p] = body.eta.eval(sph_point(rx[0], rx[1], rx[2]));
  }
  MatD q = interpolate_symmetric(cfg, omega);
  if (frob_norm(q) > 0.2)
    throw std::runtime_error("construct_support: perturbation too large for the first-order construction");
  MatD tq = MatD::identity(3);
  for (std::size_t i = 0; i < 9; ++i) tq.e[i] += q.e[i];
  MatD map = mat_mul(rotation, tq);  // lattice map applied to D_3

  AdmissibleResult res;
  res.rotation = rotation;
  res.q = q;
  res.t = map;
  res.alpha = 0.0;
  res.det_ratio = det_float(tq);
  res.admissible = true;

  const auto& shorts = d3_short_vectors();
  const MatD& embed = d3_lattice().embed;
  for (std::size_t s = 0; s < shorts.pairs.size(); ++s) {
    const auto& c = shorts.pairs[s];
    VecD v(3, 0.0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) v[j] += c[i] * embed.at(i, j);
    VecD tv = mat_vec(map, v);
    double nv = norm2(tv);
    // Outside certificate: a direction u with <u, tv> >= h(u). Try the radial
    // direction, then the design direction of the matching minimal pair.
    bool outside = false;
    SphPoint vhat = sph_point(tv[0], tv[1], tv[2]);
    if (nv >= body.support(vhat) - 1e-12) outside = true;
    if (!outside) {
      for (std::size_t p = 0; p < np && !outside; ++p) {
        VecD rx = mat_vec(rotation, cfg.unit(p));
        SphPoint u = sph_point(rx[0], rx[1], rx[2]);
        double lhs = tv[0] * u.x + tv[1] * u.y + tv[2] * u.z;
        if (lhs >= body.support(u) - 1e-12) outside = true;
      }
    }
    if (!outside) {
      res.admissible = false;
      res.offender = tv;
      break;
    }
    ++res.checked_vectors;
  }
  res.checked_vectors *= 2;  // pairs carry both signs

  // Volume lower bound: the inscribed ball of radius min h.
  double hmin = 1.0 - eta_max;
  double vol_lb = 4.0 * M_PI / 3.0 * hmin * hmin * hmin;
  double d_lambda = res.det_ratio / std::sqrt(2.0);
  res.phi_lower = vol_lb / (8.0 * d_lambda);
  return res;
}

AdmissibleResult construct_radial(const RadialBody& body, const MatD& rotation) {
  if (body.epsilon > 0.01)
    throw std::invalid_argument("construct_radial: requires epsilon <= 0.01");
  if (!body.normalized)
    throw std::invalid_argument("construct_radial: body must be normalized");
  if (grid_max_abs(body.rho) > body.epsilon)
    throw std::invalid_argument("construct_radial: body leaves the (1+eps) shell");
  const auto& cfg = d3_configuration();
  const std::size_t np = cfg.pair_count();

  VecD omega(np, 0.0);
  for (std::size_t p = 0; p < np; ++p) {
    VecD rx = mat_vec(rotation, cfg.unit(p));
    omega[p] = body.rho.eval(sph_point(rx[0], rx[1], rx[2]));
  }
  MatD q = interpolate_symmetric(cfg, omega);
  if (frob_norm(q) > 0.2)
    throw std::runtime_error("construct_radial: perturbation too large for the first-order construction");
  MatD tq = MatD::identity(3);
  for (std::size_t i = 0; i < 9; ++i) tq.e[i] += q.e[i];
  MatD map0 = mat_mul(rotation, tq);

  const auto& shorts = d3_short_vectors();
  const MatD& embed = d3_lattice().embed;
  std::vector<VecD> tv(shorts.pairs.size());
  double alpha = 0.0;
  for (std::size_t s = 0; s < shorts.pairs.size(); ++s) {
    const auto& c = shorts.pairs[s];
    VecD v(3, 0.0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) v[j] += c[i] * embed.at(i, j);
    tv[s] = mat_vec(map0, v);
    double nv = norm2(tv[s]);
    SphPoint vhat = sph_point(tv[s][0], tv[s][1], tv[s][2]);
    alpha = std::max(alpha, body.radial(vhat) / nv - 1.0);
  }
  if (alpha > 0.05)
    throw std::runtime_error("construct_radial: dilation out of range, enumeration bound unsafe");

  AdmissibleResult res;
  res.rotation = rotation;
  res.q = q;
  res.alpha = alpha;
  res.t = map0;
  for (auto& x : res.t.e) x *= 1.0 + alpha;
  res.det_ratio = (1.0 + alpha) * (1.0 + alpha) * (1.0 + alpha) * det_float(tq);

  // Independent admissibility oracle: every short vector of the final lattice
  // passes the radial outside-test.
  res.admissible = true;
  for (std::size_t s = 0; s < shorts.pairs.size(); ++s) {
    VecD w = tv[s];
    for (auto& x : w) x *= 1.0 + alpha;
    double nw = norm2(w);
    SphPoint what = sph_point(w[0], w[1], w[2]);
    if (nw < body.radial(what) - 1e-12) {
      res.admissible = false;
      res.offender = w;
      break;
    }
    ++res.checked_vectors;
  }
  res.checked_vectors *= 2;

  double d_lambda = res.det_ratio / std::sqrt(2.0);  // d(D_3) = 2^{-1/2}
  res.phi_lower = volume(body) / (8.0 * d_lambda);
  return res;
}

RotationSearch best_rotation(const RadialBody& body, std::size_t n_samples,
                             int refine_steps, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("best_rotation: need n_samples >= 1");
  std::mt19937_64 rng(seed);
  // Keep the best few candidates for local refinement.
  constexpr std::size_t kKeep = 5;
  std::vector<std::pair<double, MatD>> best;
  for (std::size_t i = 0; i < n_samples; ++i) {
    MatD r = random_rotation_from(rng);
    double obj = rotation_objective(body, r);
    if (best.size() < kKeep) {
      best.emplace_back(obj, r);
      std::sort(best.begin(), best.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    } else if (obj < best.back().first) {
      best.back() = {obj, r};
      std::sort(best.begin(), best.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  }
  // Coordinate descent on axis-angle perturbations, step halving to 1e-4 rad.
  RotationSearch out{best.front().second, best.front().first};
  const int max_iters = std::max(refine_steps, 40);
  for (auto& [obj, rot] : best) {
    double step = 0.1;
    for (int it = 0; it < max_iters && step >= 1e-4; ++it) {
      bool improved = false;
      for (int axis = 0; axis < 3; ++axis) {
        for (double sgn : {1.0, -1.0}) {
          MatD cand = mat_mul(axis_rotation(axis, sgn * step), rot);
          double o = rotation_objective(body, cand);
          if (o < obj) {
            obj = o;
            rot = cand;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (obj < out.objective) out = {rot, obj};
  }
  return out;
}

PessimumVerdict verify_pessimum(const RadialBody& body, std::size_t rotations,
                                int refine_steps, std::uint64_t search_seed) {
  if (!body.normalized)
    throw std::invalid_argument("verify_pessimum: body must be normalized");
  if (body.rho.coeff_norm() == 0.0)
    throw std::invalid_argument("verify_pessimum: the ball itself is excluded");
  if (body.epsilon > 0.01)
    throw std::invalid_argument("verify_pessimum: requires epsilon <= 0.01");

  RotationSearch rs = best_rotation(body, rotations, refine_steps, search_seed);
  AdmissibleResult adm = construct_radial(body, rs.rotation);

  PessimumVerdict v;
  v.rotation = rs.rotation;
  v.alpha = adm.alpha;
  v.phi_lower = adm.phi_lower;
  v.checked_vectors = adm.checked_vectors;
  v.admissible = adm.admissible;
  v.l1_norm = body.rho.l1_norm();
  v.margin = adm.phi_lower - phi_ball3();
  v.delta = phi_ball3() / adm.phi_lower - 1.0;
  v.ratio = v.l1_norm > 0.0 ? -v.delta / v.l1_norm : 0.0;
  v.ok = adm.admissible && adm.phi_lower > phi_ball3();
  return v;
}

FiberAverage fiber_average(const RadialBody& body, const SphPoint& y,
                           std::size_t samples, std::uint64_t seed) {
  const auto& cfg = d3_configuration();
  // Fix x0 = the first stored pair; U^{-1} = A(y) Rz(theta) A(x0)^{-1}.
  const VecD& x0 = cfg.unit(0);
  MatD a_x0 = rotation_to(sph_point(x0[0], x0[1], x0[2]));
  MatD a_y = rotation_to(y);
  MatD a_x0_inv = transpose(a_x0);

  std::mt19937_64 rng(seed);
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    double theta = 2.0 * M_PI * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
    MatD uinv = mat_mul(a_y, mat_mul(axis_rotation(2, theta), a_x0_inv));
    double val = 0.0;
    for (std::size_t p = 0; p < cfg.pair_count(); ++p) {
      VecD ux = mat_vec(uinv, cfg.unit(p));
      val += 2.0 * body.rho.eval(sph_point(ux[0], ux[1], ux[2]));
    }
    sum += val;
    sum2 += val * val;
  }
  FiberAverage fa;
  fa.mean = sum / samples;
  double var = std::max(0.0, sum2 / samples - fa.mean * fa.mean);
  fa.stderr_ = std::sqrt(var / samples);
  fa.predicted = 2.0 * phi_point(body.rho, y);
  return fa;
}

}  // namespace latpack
