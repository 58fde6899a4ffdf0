#include "latpack/body.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace latpack {

namespace {

// Fixed verification grid (uniform in colatitude and azimuth).
constexpr int kGridTheta = 96;
constexpr int kGridPhi = 192;

double uniform_pm1(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

}  // namespace

double grid_max_abs(const EvenHarmonic& f) {
  double mx = 0.0;
  for (int i = 0; i <= kGridTheta; ++i) {
    double th = M_PI * i / kGridTheta;
    double ct = std::cos(th), st = std::sin(th);
    for (int j = 0; j < kGridPhi; ++j) {
      double ph = 2.0 * M_PI * j / kGridPhi;
      SphPoint p{st * std::cos(ph), st * std::sin(ph), ct};
      mx = std::max(mx, std::fabs(f.eval(p)));
    }
  }
  return mx;
}

RadialBody make_radial_body(EvenHarmonic rho, double epsilon) {
  RadialBody b;
  b.max_abs_rho = grid_max_abs(rho);
  if (b.max_abs_rho > epsilon)
    throw std::invalid_argument("make_radial_body: body leaves the (1+eps) shell");
  b.epsilon = epsilon;
  bool mean_ok = std::fabs(rho.mean()) <= 1e-12;
  bool quad_ok = rho.bandlimit() < 2 || rho.degree_norm(2) <= 1e-9;
  b.normalized = mean_ok && quad_ok;
  b.rho = std::move(rho);
  return b;
}

RadialBody random_body(std::uint64_t seed, int bandlimit, double epsilon) {
  if (bandlimit % 2 != 0 || bandlimit < 4 || bandlimit > 12)
    throw std::invalid_argument("random_body: band limit must be even in [4, 12]");
  if (epsilon <= 0.0 || epsilon > 0.02)
    throw std::invalid_argument("random_body: epsilon must be in (0, 0.02]");
  std::mt19937_64 rng(seed);
  EvenHarmonic rho(bandlimit);
  for (int l = 4; l <= bandlimit; l += 2)
    for (int m = -l; m <= l; ++m) rho.coeff(l, m) = uniform_pm1(rng);
  double mx = grid_max_abs(rho);
  if (mx > 0.0) rho.scale(0.9 * epsilon / mx);
  return make_radial_body(std::move(rho), epsilon);
}

SupportBody random_support_body(std::uint64_t seed, int bandlimit, double epsilon) {
  RadialBody r = random_body(seed, bandlimit, epsilon);
  SupportBody s;
  s.eta = std::move(r.rho);
  s.epsilon = epsilon;
  return s;
}

double volume(const RadialBody& body) {
  const auto& quad = SphereQuadrature::shared(3 * body.rho.bandlimit() + 2);
  double integral = quad.integrate([&](const SphPoint& p) {
    double r = body.radial(p);
    return r * r * r;
  });
  return 4.0 * M_PI / 3.0 * integral;
}

namespace {

// Trace-free symmetric 3x3 basis used to identify quadratic forms with
// degree-2 harmonics.
std::array<MatD, 5> sym0_basis() {
  std::array<MatD, 5> b;
  for (auto& m : b) m = MatD(3, 3);
  b[0].at(0, 0) = 1; b[0].at(1, 1) = -1;
  b[1].at(0, 0) = 1; b[1].at(2, 2) = -1;
  b[2].at(0, 1) = b[2].at(1, 0) = 1;
  b[3].at(0, 2) = b[3].at(2, 0) = 1;
  b[4].at(1, 2) = b[4].at(2, 1) = 1;
  return b;
}

// 5x5 map from Sym0 coordinates to degree-2 harmonic coefficients.
MatD sym0_to_harmonic() {
  auto basis = sym0_basis();
  const auto& quad = SphereQuadrature::shared(8);
  MatD m(5, 5);
  for (int k = 0; k < 5; ++k) {
    auto coef = project_degree(
        quad,
        [&](const SphPoint& p) {
          VecD x{p.x, p.y, p.z};
          VecD ax = mat_vec(basis[k], x);
          return dot(x, ax);
        },
        2, 2);
    for (int i = 0; i < 5; ++i) m.at(i, k) = coef[i];
  }
  return m;
}

// Radial function of (Id + A) K at u: r_K(w) / |y| with y = (Id+A)^{-1} u,
// w = y / |y|.
double mapped_radial(const RadialBody& body, const MatD& inv_map, const SphPoint& u) {
  VecD y = mat_vec(inv_map, {u.x, u.y, u.z});
  double ny = norm2(y);
  SphPoint w{y[0] / ny, y[1] / ny, y[2] / ny};
  return body.radial(w) / ny;
}

}  // namespace

QuadraticRemoval remove_quadratic(const RadialBody& body) {
  if (body.epsilon > 0.02)
    throw std::invalid_argument("remove_quadratic: shell bound must be <= 0.02");
  const int lin = body.rho.bandlimit();
  const int lout = std::max(lin + 4, 8);
  const auto& quad = SphereQuadrature::shared(std::max(2 * lout + 8, 32));
  MatD m2 = sym0_to_harmonic();
  auto basis = sym0_basis();

  VecD a_coords(5, 0.0);  // A in Sym0 coordinates
  int iter = 0;
  double residual = 0.0;
  std::vector<double> pi2;
  for (; iter < 200; ++iter) {
    MatD a = MatD::identity(3);
    MatD asym(3, 3);
    for (int k = 0; k < 5; ++k)
      for (std::size_t t = 0; t < 9; ++t) asym.e[t] += a_coords[k] * basis[k].e[t];
    for (std::size_t t = 0; t < 9; ++t) a.e[t] += asym.e[t];
    MatD inv = invert(a);
    pi2 = project_degree(
        quad, [&](const SphPoint& u) { return mapped_radial(body, inv, u); }, 2,
        quad.degree() - 2);
    residual = 0.0;
    for (double v : pi2) residual += v * v;
    residual = std::sqrt(residual);
    if (residual <= 0.9e-9) break;
    // A <- F_K(A) = A - (pi_2 r as a quadratic form).
    VecD corr = solve_linear(m2, pi2);
    for (int k = 0; k < 5; ++k) a_coords[k] -= corr[k];
  }
  if (residual > 1e-9)
    throw std::runtime_error("remove_quadratic: no convergence in 200 iterations, residual " +
                             std::to_string(residual));

  MatD a = MatD::identity(3);
  for (int k = 0; k < 5; ++k)
    for (std::size_t t = 0; t < 9; ++t) a.e[t] += a_coords[k] * basis[k].e[t];
  MatD inv = invert(a);
  EvenHarmonic r_new = project_even(
      quad, [&](const SphPoint& u) { return mapped_radial(body, inv, u); }, lout,
      quad.degree() - lout);
  double mean = r_new.coeff(0, 0);
  r_new.scale(1.0 / mean);
  EvenHarmonic rho_out = r_new;
  rho_out.coeff(0, 0) = 0.0;  // r/mean - 1 has exact zero mean

  QuadraticRemoval out;
  out.iterations = iter + 1;
  out.final_residual = residual / mean;
  out.transform = a;
  double mx = grid_max_abs(rho_out);
  out.body = make_radial_body(std::move(rho_out), std::max(body.epsilon, mx * 1.125));
  return out;
}

bool convexity_spot_check(const RadialBody& body, std::size_t directions, double tol) {
  // Fibonacci sphere sample; supporting-plane test at every sampled normal.
  std::vector<SphPoint> pts(directions);
  const double ga = M_PI * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < directions; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / directions;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    pts[i] = {r * std::cos(ga * i), r * std::sin(ga * i), z};
  }
  std::vector<VecD> boundary(directions);
  for (std::size_t i = 0; i < directions; ++i) {
    double r = body.radial(pts[i]);
    boundary[i] = {r * pts[i].x, r * pts[i].y, r * pts[i].z};
  }
  const double h = 1e-5;
  for (std::size_t i = 0; i < directions; ++i) {
    const SphPoint& u = pts[i];
    // Tangential gradient of rho by central differences along two tangents.
    VecD uv{u.x, u.y, u.z};
    VecD t1 = std::fabs(u.z) < 0.9 ? VecD{-u.y, u.x, 0.0} : VecD{0.0, -u.z, u.y};
    double n1 = norm2(t1);
    for (auto& v : t1) v /= n1;
    VecD t2{u.y * t1[2] - u.z * t1[1], u.z * t1[0] - u.x * t1[2], u.x * t1[1] - u.y * t1[0]};
    auto eval_dir = [&](const VecD& d, double s) {
      return body.rho.eval(sph_point(u.x + s * d[0], u.y + s * d[1], u.z + s * d[2]));
    };
    double g1 = (eval_dir(t1, h) - eval_dir(t1, -h)) / (2.0 * h);
    double g2 = (eval_dir(t2, h) - eval_dir(t2, -h)) / (2.0 * h);
    double r = body.radial(u);
    // Outward normal of the boundary point r(u) u.
    VecD normal(3);
    for (int k = 0; k < 3; ++k) normal[k] = r * uv[k] - g1 * t1[k] - g2 * t2[k];
    double rhs = dot(normal, boundary[i]);
    for (std::size_t j = 0; j < directions; ++j)
      if (dot(normal, boundary[j]) > rhs + tol) return false;
  }
  return true;
}

}  // namespace latpack
