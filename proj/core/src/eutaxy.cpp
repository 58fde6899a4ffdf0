#include "latpack/eutaxy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latpack {

namespace {

constexpr std::uint64_t kPerfectionPrime = 1000003;
constexpr std::size_t kModpThreshold = 5000;

long long to_ll_checked(const BigInt& x, const char* what) {
  if (!x.fits_slong_p()) throw std::domain_error(std::string(what) + ": value too large");
  return x.get_si();
}

BigInt bigint_from_i128(__int128 v) {
  bool neg = v < 0;
  auto a = static_cast<unsigned __int128>(neg ? -v : v);
  BigInt hi(static_cast<unsigned long>(a >> 64));
  BigInt lo(static_cast<unsigned long>(a & 0xffffffffffffffffULL));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

}  // namespace

VectorConfiguration::VectorConfiguration(RatMatrix gram, const MatD& embed,
                                         std::vector<std::vector<int>> pairs)
    : gram_(std::move(gram)), pairs_(std::move(pairs)), embed_(embed) {
  if (!gram_.is_symmetric())
    throw std::invalid_argument("VectorConfiguration: Gram not symmetric");
  dim_ = gram_.rows();
  if (pairs_.empty()) throw std::invalid_argument("VectorConfiguration: no pairs");

  lambda_ = 1;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      mpz_lcm(lambda_.get_mpz_t(), lambda_.get_mpz_t(), gram_.at(i, j).den().get_mpz_t());
  gz_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      BigInt v = gram_.at(i, j).num() * (lambda_ / gram_.at(i, j).den());
      gz_[i * dim_ + j] = to_ll_checked(v, "VectorConfiguration");
    }

  u_.reserve(pairs_.size());
  units_.reserve(pairs_.size());
  bool have_norm = false;
  long long qnorm = 0;
  for (const auto& c : pairs_) {
    if (c.size() != dim_)
      throw std::invalid_argument("VectorConfiguration: pair dimension mismatch");
    std::vector<long long> u(dim_, 0);
    __int128 q = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      __int128 acc = 0;
      for (std::size_t j = 0; j < dim_; ++j)
        acc += static_cast<__int128>(gz_[i * dim_ + j]) * c[j];
      if (acc > INT64_MAX || acc < INT64_MIN)
        throw std::domain_error("VectorConfiguration: scaled vector overflow");
      u[i] = static_cast<long long>(acc);
      q += acc * c[i];
    }
    if (q <= 0) throw std::invalid_argument("VectorConfiguration: nonpositive norm");
    auto qll = static_cast<long long>(q);
    if (!have_norm) {
      qnorm = qll;
      have_norm = true;
    } else if (qll != qnorm) {
      throw std::invalid_argument("VectorConfiguration: vectors of unequal norm");
    }
    u_.push_back(std::move(u));
  }
  norm_ = Rational(to_bigint(qnorm), lambda_);

  double inv_sqrt_m = 1.0 / std::sqrt(norm_.to_double());
  for (const auto& c : pairs_) {
    VecD v(dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        v[j] += static_cast<double>(c[i]) * embed_.at(i, j);
    }
    for (auto& x : v) x *= inv_sqrt_m;
    units_.push_back(std::move(v));
  }
}

std::vector<Rational> VectorConfiguration::w(std::size_t p) const {
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = Rational(to_bigint(u_[p][i]), lambda_);
  return out;
}

Rational VectorConfiguration::unit_inner(std::size_t p, std::size_t q) const {
  __int128 acc = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    acc += static_cast<__int128>(pairs_[p][i]) * u_[q][i];
  // c_p^T G c_q / m = acc / (lambda * m)
  return Rational(bigint_from_i128(acc), lambda_) / norm_;
}

VectorConfiguration VectorConfiguration::without_pair(std::size_t p) const {
  std::vector<std::vector<int>> rest;
  rest.reserve(pairs_.size() - 1);
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (i != p) rest.push_back(pairs_[i]);
  return VectorConfiguration(gram_, embed_, std::move(rest));
}

VectorConfiguration VectorConfiguration::subset(const std::vector<std::size_t>& idx) const {
  std::vector<std::vector<int>> sel;
  sel.reserve(idx.size());
  for (auto i : idx) sel.push_back(pairs_.at(i));
  return VectorConfiguration(gram_, embed_, std::move(sel));
}

VectorConfiguration unit_configuration(const Lattice& lat, const MinimalVectors& mv) {
  return VectorConfiguration(lat.gram, lat.embed, mv.coords);
}

const char* to_string(EutaxyClass c) {
  switch (c) {
    case EutaxyClass::none: return "none";
    case EutaxyClass::weak: return "weak";
    case EutaxyClass::semi: return "semi";
    case EutaxyClass::eutactic: return "eutactic";
  }
  return "?";
}

namespace {

// Integer moment rows: unweighted upper-triangle vectorization of c c^T with
// doubled off-diagonal entries, one row per pair. Row rank equals the rank of
// the projection forms (congruence by G and column scaling preserve rank).
IntRows moment_rows(const VectorConfiguration& cfg) {
  const std::size_t n = cfg.dim();
  const std::size_t k = n * (n + 1) / 2;
  IntRows rows;
  rows.reserve(cfg.pair_count());
  for (const auto& c : cfg.pairs()) {
    IntRow row(k);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        long long v = static_cast<long long>(c[i]) * c[j];
        row[t++] = i == j ? to_bigint(v) : to_bigint(2 * v);
      }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Equality system of eq-style eutaxy: one column per pair holding the
// vectorized form (2/m) w w^T, rhs the vectorized Gram.
void eutaxy_system(const VectorConfiguration& cfg, RatMatrix& a, std::vector<Rational>& b) {
  const std::size_t n = cfg.dim();
  const std::size_t rows = n * (n + 1) / 2;
  const Rational scale = Rational(2) / (cfg.norm() * Rational(cfg.lambda()) * Rational(cfg.lambda()));
  a = RatMatrix(rows, cfg.pair_count());
  b.assign(rows, Rational(0));
  const auto& u = cfg.scaled_w();
  for (std::size_t p = 0; p < cfg.pair_count(); ++p) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        a.at(t++, p) = scale * Rational(BigInt(to_bigint(u[p][i]) * to_bigint(u[p][j])));
  }
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) b[t++] = cfg.gram().at(i, j);
}

}  // namespace

bool is_perfect(const VectorConfiguration& cfg, std::uint64_t* prime_used) {
  if (prime_used) *prime_used = 0;
  const std::size_t full = cfg.dim() * (cfg.dim() + 1) / 2;
  if (cfg.pair_count() < full) return false;
  IntRows rows = moment_rows(cfg);
  if (cfg.pair_count() > kModpThreshold) {
    if (rank_modp(rows, full, kPerfectionPrime) == full) {
      if (prime_used) *prime_used = kPerfectionPrime;
      return true;
    }
    // Deficient mod-p rank is inconclusive; fall through to the exact rank.
  }
  return rank_exact(rows, full) == full;
}

std::pair<EutaxyClass, std::vector<Rational>> eutaxy_class(const VectorConfiguration& cfg) {
  RatMatrix a;
  std::vector<Rational> b;
  eutaxy_system(cfg, a, b);
  auto unrestricted = rat_solve(a, b);
  if (!unrestricted) return {EutaxyClass::none, {}};
  LpResult nonneg = lp_solve(a, b, /*strict=*/false);
  if (nonneg.status != LpStatus::feasible)
    return {EutaxyClass::weak, std::move(*unrestricted)};
  LpResult strict = lp_solve(a, b, /*strict=*/true);
  if (strict.status == LpStatus::feasible)
    return {EutaxyClass::eutactic, std::move(strict.solution)};
  return {EutaxyClass::semi, std::move(nonneg.solution)};
}

bool verify_uniform_eutaxy(const VectorConfiguration& cfg) {
  const std::size_t n = cfg.dim();
  const auto& u = cfg.scaled_w();
  // Accumulate M = sum over pairs of u u^T; check (2n / (|S| m lambda^2)) M = G.
  double max_abs = 0.0;
  for (const auto& up : u)
    for (long long x : up) max_abs = std::max(max_abs, std::fabs(static_cast<double>(x)));
  const bool fits = max_abs * max_abs * static_cast<double>(cfg.pair_count()) < 4.0e18;

  std::vector<BigInt> m(n * (n + 1) / 2, BigInt(0));
  if (fits) {
    std::vector<long long> acc(n * (n + 1) / 2, 0);
    for (const auto& up : u) {
      std::size_t t = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) acc[t++] += up[i] * up[j];
    }
    for (std::size_t t = 0; t < acc.size(); ++t) m[t] = to_bigint(acc[t]);
  } else {
    for (const auto& up : u) {
      std::size_t t = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          BigInt prod = to_bigint(up[i]) * to_bigint(up[j]);
          m[t++] += prod;
        }
    }
  }
  // 2n/( |S| m lambda^2 ) * M == G, cross-multiplied to integers:
  // 2n * M_ij * den == num * |S| * m * lambda^2 with G_ij = num/den exact.
  const Rational scale =
      Rational(2 * static_cast<long>(n)) /
      (Rational(static_cast<long>(cfg.vector_count())) * cfg.norm() *
       Rational(cfg.lambda()) * Rational(cfg.lambda()));
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (scale * Rational(m[t++]) != cfg.gram().at(i, j)) return false;
  return true;
}

bool verify_eutaxy_coefficients(const VectorConfiguration& cfg,
                                const std::vector<Rational>& upsilon) {
  if (upsilon.size() != cfg.pair_count()) return false;
  const std::size_t n = cfg.dim();
  const auto& u = cfg.scaled_w();
  const Rational scale = Rational(2) / (cfg.norm() * Rational(cfg.lambda()) * Rational(cfg.lambda()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational acc(0);
      for (std::size_t p = 0; p < cfg.pair_count(); ++p) {
        if (upsilon[p].is_zero()) continue;
        acc += upsilon[p] * Rational(BigInt(to_bigint(u[p][i]) * to_bigint(u[p][j])));
      }
      if (acc * scale != cfg.gram().at(i, j)) return false;
    }
  return true;
}

EutaxyReport classify(const VectorConfiguration& cfg, const ClassifyOptions& opts) {
  EutaxyReport rep;
  rep.perfect = is_perfect(cfg, &rep.perfection_prime);

  // Transitive configurations carry uniform coefficients n/|S|; verifying the
  // identity exactly settles eutaxy without an LP.
  if (opts.transitive && verify_uniform_eutaxy(cfg)) {
    rep.eutaxy = EutaxyClass::eutactic;
    rep.coefficients.assign(cfg.pair_count(),
                            Rational(static_cast<long>(cfg.dim()),
                                     static_cast<long>(cfg.vector_count())));
  } else {
    auto [cls, coef] = eutaxy_class(cfg);
    rep.eutaxy = cls;
    rep.coefficients = std::move(coef);
  }

  rep.extreme = rep.perfect && rep.eutaxy == EutaxyClass::eutactic;
  rep.minimally_extreme =
      rep.extreme && cfg.pair_count() == cfg.dim() * (cfg.dim() + 1) / 2;
  if (!rep.extreme) rep.witness = shrink_witness(cfg);

  if (!opts.check_redundancy || !rep.extreme) return rep;

  // Redundancy: delete a representative pair (all pairs when not transitive).
  std::vector<std::size_t> deletions;
  if (opts.transitive) {
    std::size_t pick = 0;
    if (!opts.certificate_subset.empty()) {
      std::vector<bool> in_cert(cfg.pair_count(), false);
      for (auto i : opts.certificate_subset) in_cert[i] = true;
      while (pick < cfg.pair_count() && in_cert[pick]) ++pick;
      if (pick == cfg.pair_count())
        throw std::invalid_argument("classify: certificate subset covers every pair");
    }
    deletions.push_back(pick);
  } else {
    for (std::size_t p = 0; p < cfg.pair_count(); ++p) deletions.push_back(p);
  }

  bool all_semi = true, all_extreme = true, decided = true;
  for (auto d : deletions) {
    bool cert_applies = false;
    if (!opts.certificate_subset.empty() &&
        std::find(opts.certificate_subset.begin(), opts.certificate_subset.end(), d) ==
            opts.certificate_subset.end()) {
      VectorConfiguration sub = cfg.subset(opts.certificate_subset);
      bool sub_extreme = is_perfect(sub) &&
                         (verify_uniform_eutaxy(sub) ||
                          eutaxy_class(sub).first == EutaxyClass::eutactic);
      if (sub_extreme) {
        cert_applies = true;  // extreme subset survives the deletion
      } else if (cfg.pair_count() > kModpThreshold) {
        decided = false;  // certificate failed and the direct LP is out of reach
        continue;
      }
    }
    if (cert_applies) continue;
    VectorConfiguration reduced = cfg.without_pair(d);
    auto [cls, coef] = eutaxy_class(reduced);
    (void)coef;
    bool semi = cls == EutaxyClass::semi || cls == EutaxyClass::eutactic;
    bool ext = cls == EutaxyClass::eutactic && is_perfect(reduced);
    all_semi = all_semi && semi;
    all_extreme = all_extreme && ext;
    if (!semi) break;
  }
  if (decided) {
    rep.redundantly_semi_eutactic = all_semi;
    rep.redundantly_extreme = all_extreme;
  }
  return rep;
}

namespace {

// Trace row in the same upper-triangle coordinates as the moment rows:
// trace(E^T Y E) = sum_i Y_ii G_ii + 2 sum_{i<j} Y_ij G_ij.
std::vector<Rational> trace_row(const VectorConfiguration& cfg) {
  const std::size_t n = cfg.dim();
  std::vector<Rational> row(n * (n + 1) / 2);
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      row[t++] = i == j ? cfg.gram().at(i, i) : Rational(2) * cfg.gram().at(i, j);
  return row;
}

// Form-value rows over the pairs: row_p(Y) = w_p^T Y w_p (scaled by lambda^2,
// which leaves signs unchanged).
RatMatrix form_rows(const VectorConfiguration& cfg) {
  const std::size_t n = cfg.dim();
  const std::size_t k = n * (n + 1) / 2;
  RatMatrix rows(cfg.pair_count(), k);
  const auto& u = cfg.scaled_w();
  for (std::size_t p = 0; p < cfg.pair_count(); ++p) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        BigInt v = to_bigint(u[p][i]) * to_bigint(u[p][j]);
        rows.at(p, t++) = i == j ? Rational(v) : Rational(BigInt(2 * v));
      }
  }
  return rows;
}

MatD upper_vec_to_sym(const std::vector<Rational>& y, std::size_t n) {
  MatD q(n, n);
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double v = y[t++].to_double();
      q.at(i, j) = v;
      q.at(j, i) = v;
    }
  return q;
}

// Separating symmetric form Y in basis coordinates: w^T Y w >= 0 on every
// pair, trace form <= 0, Y != 0. Exists iff the configuration is not extreme.
std::optional<std::vector<Rational>> separating_form(const VectorConfiguration& cfg) {
  const std::size_t n = cfg.dim();
  const std::size_t k = n * (n + 1) / 2;
  const std::size_t np = cfg.pair_count();
  RatMatrix fr = form_rows(cfg);
  auto tr = trace_row(cfg);

  // (a) Some form value positive: variables y+, y-, slacks s_p >= 0, slack
  // u >= 0; rows: form_p(y) - s_p = 0, trace(y) + u = 0, sum_p s_p = 1.
  {
    RatMatrix a(np + 2, 2 * k + np + 1);
    std::vector<Rational> b(np + 2, Rational(0));
    for (std::size_t p = 0; p < np; ++p) {
      for (std::size_t t = 0; t < k; ++t) {
        a.at(p, t) = fr.at(p, t);
        a.at(p, k + t) = -fr.at(p, t);
      }
      a.at(p, 2 * k + p) = -1;
    }
    for (std::size_t t = 0; t < k; ++t) {
      a.at(np, t) = tr[t];
      a.at(np, k + t) = -tr[t];
    }
    a.at(np, 2 * k + np) = 1;
    for (std::size_t p = 0; p < np; ++p) a.at(np + 1, 2 * k + p) = 1;
    b[np + 1] = 1;
    LpResult lp = lp_solve(a, b, /*strict=*/false);
    if (lp.status == LpStatus::feasible) {
      std::vector<Rational> y(k);
      for (std::size_t t = 0; t < k; ++t) y[t] = lp.solution[t] - lp.solution[k + t];
      return y;
    }
  }
  // (b) All form values zero, trace strictly negative.
  {
    RatMatrix a(np + 1, k);
    std::vector<Rational> b(np + 1, Rational(0));
    for (std::size_t p = 0; p < np; ++p)
      for (std::size_t t = 0; t < k; ++t) a.at(p, t) = fr.at(p, t);
    for (std::size_t t = 0; t < k; ++t) a.at(np, t) = tr[t];
    b[np] = -1;
    if (auto y = rat_solve(a, b)) return y;
  }
  // (c) All form values zero, trace zero, Y nonzero (the span complement).
  {
    RatMatrix a(np + 1, k);
    for (std::size_t p = 0; p < np; ++p)
      for (std::size_t t = 0; t < k; ++t) a.at(p, t) = fr.at(p, t);
    for (std::size_t t = 0; t < k; ++t) a.at(np, t) = tr[t];
    if (auto y = rat_nullspace_one(a)) return y;
  }
  return std::nullopt;
}

}  // namespace

ShrinkWitness shrink_witness(const VectorConfiguration& cfg) {
  auto y = separating_form(cfg);
  if (!y) throw std::domain_error("shrink_witness: configuration is extreme, no witness exists");

  // Euclidean Q = E^T Y E with E the configuration's own embedding rows
  // (G = E E^T), so that <x, Q x> on the stored unit vectors equals the exact
  // form values.
  const std::size_t n = cfg.dim();
  MatD yf = upper_vec_to_sym(*y, n);
  const MatD& e = cfg.embedding();
  MatD q = mat_mul(transpose(e), mat_mul(yf, e));
  // Symmetrize and normalize.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = 0.5 * (q.at(i, j) + q.at(j, i));
      q.at(i, j) = v;
      q.at(j, i) = v;
    }
  double nrm = frob_norm(q);
  if (nrm == 0.0) throw std::runtime_error("shrink_witness: degenerate separating form");
  for (auto& v : q.e) v /= nrm;

  ShrinkWitness wit;
  wit.q = q;
  double alpha = 1.0;
  for (int iter = 0; iter < 200; ++iter, alpha *= 0.5) {
    MatD m = MatD::identity(n);
    for (std::size_t i = 0; i < n * n; ++i) m.e[i] += alpha * q.e[i];
    MatD t;
    try {
      t = psd_sqrt(m);
    } catch (const std::domain_error&) {
      continue;  // alpha too large for positive definiteness
    }
    if (frob_dist_identity(t) > 1e-2) continue;
    wit.alpha = alpha;
    wit.t = t;
    break;
  }
  if (wit.t.rows == 0) throw std::runtime_error("shrink_witness: no admissible alpha");
  wit.det_t = det_float(wit.t);
  wit.min_stretch = 1e300;
  for (std::size_t p = 0; p < cfg.pair_count(); ++p) {
    VecD tx = mat_vec(wit.t, cfg.unit(p));
    wit.min_stretch = std::min(wit.min_stretch, norm2(tx) / norm2(cfg.unit(p)));
  }
  if (!(wit.det_t < 1.0) || wit.min_stretch < 1.0 - 1e-12)
    throw std::runtime_error("shrink_witness: postcondition violated");
  return wit;
}

std::vector<Rational> minimally_extreme_coefficients(const VectorConfiguration& cfg) {
  const std::size_t full = cfg.dim() * (cfg.dim() + 1) / 2;
  if (cfg.pair_count() != full)
    throw std::invalid_argument("configuration is not minimally extreme: wrong pair count");
  RatMatrix a;
  std::vector<Rational> b;
  eutaxy_system(cfg, a, b);
  auto sol = rat_solve(a, b);
  if (!sol) throw std::invalid_argument("configuration is not minimally extreme: no coefficients");
  for (const auto& v : *sol)
    if (v.sign() <= 0)
      throw std::invalid_argument("configuration is not minimally extreme: nonpositive coefficient");
  return *sol;
}

MatD interpolate_symmetric(const VectorConfiguration& cfg, const VecD& omega) {
  const std::size_t n = cfg.dim();
  const std::size_t k = n * (n + 1) / 2;
  if (omega.size() != cfg.pair_count())
    throw std::invalid_argument("interpolate_symmetric: omega size mismatch");
  auto upsilon = minimally_extreme_coefficients(cfg);  // also validates the input

  MatD a(k, k);
  VecD rhs(k, 0.0);
  for (std::size_t p = 0; p < k; ++p) {
    const VecD& x = cfg.unit(p);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        a.at(p, t++) = i == j ? x[i] * x[j] : 2.0 * x[i] * x[j];
    rhs[p] = omega[p];
  }
  VecD sol;
  try {
    sol = solve_linear(a, rhs);
  } catch (const std::domain_error&) {
    throw std::domain_error("interpolate_symmetric: singular interpolation system");
  }
  MatD q(n, n);
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      q.at(i, j) = sol[t];
      q.at(j, i) = sol[t];
      ++t;
    }
  // trace Q = sum over S of upsilon_x omega_x (pairs carry both signs).
  double tr = 0.0;
  for (std::size_t i = 0; i < n; ++i) tr += q.at(i, i);
  double want = 0.0;
  for (std::size_t p = 0; p < k; ++p) want += 2.0 * upsilon[p].to_double() * omega[p];
  double scale = 1.0;
  for (double o : omega) scale = std::max(scale, std::fabs(o));
  if (std::fabs(tr - want) > 1e-12 * std::max(1.0, scale))
    throw std::runtime_error("interpolate_symmetric: trace identity violated");
  return q;
}

ExpansionCheck expansion_check(const VectorConfiguration& cfg, const MatD& t) {
  if (t.rows != cfg.dim() || t.cols != cfg.dim())
    throw std::invalid_argument("expansion_check: dimension mismatch");
  if (frob_dist_identity(t) > 0.05)
    throw std::invalid_argument("expansion_check: T too far from the identity");
  for (std::size_t p = 0; p < cfg.pair_count(); ++p) {
    VecD tx = mat_vec(t, cfg.unit(p));
    if (norm2(tx) < norm2(cfg.unit(p)) * (1.0 - 1e-14))
      throw std::invalid_argument("expansion_check: T contracts a vector of S");
  }
  ExpansionCheck out;
  out.lhs = det_float(t) - 1.0;
  MatD tt = mat_mul(transpose(t), t);
  out.rhs = frob_dist_identity(tt);
  return out;
}

}  // namespace latpack
