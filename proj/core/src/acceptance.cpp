#include "latpack/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "latpack/body.hpp"
#include "latpack/eutaxy.hpp"
#include "latpack/golay.hpp"
#include "latpack/harmonics.hpp"
#include "latpack/lattice.hpp"
#include "latpack/parallel.hpp"
#include "latpack/pessimum.hpp"

namespace latpack {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Suite {
  std::vector<Lattice> lattices;
  std::vector<MinimalVectors> minvecs;
  std::vector<std::size_t> expected_counts;
  std::size_t leech_index = 0;
  double leech_seconds = 0.0;

  const Lattice& lat(const std::string& name) const {
    for (std::size_t i = 0; i < lattices.size(); ++i)
      if (lattices[i].name == name) return lattices[i];
    throw std::logic_error("suite: unknown lattice " + name);
  }
  const MinimalVectors& mv(const std::string& name) const {
    for (std::size_t i = 0; i < lattices.size(); ++i)
      if (lattices[i].name == name) return minvecs[i];
    throw std::logic_error("suite: unknown lattice " + name);
  }
};

Suite build_suite() {
  Suite s;
  for (std::size_t n = 2; n <= 8; ++n) {
    s.lattices.push_back(root_a(n));
    s.expected_counts.push_back(n * (n + 1));
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    s.lattices.push_back(root_d(n));
    s.expected_counts.push_back(2 * n * (n - 1));
  }
  s.lattices.push_back(root_e(6));
  s.expected_counts.push_back(72);
  s.lattices.push_back(root_e(7));
  s.expected_counts.push_back(126);
  s.lattices.push_back(root_e(8));
  s.expected_counts.push_back(240);
  s.lattices.push_back(leech());
  s.expected_counts.push_back(196560);
  s.leech_index = s.lattices.size() - 1;

  s.minvecs.resize(s.lattices.size());
  for (std::size_t i = 0; i < s.lattices.size(); ++i) {
    auto t0 = Clock::now();
    s.minvecs[i] = minimal_vectors(s.lattices[i]);
    if (i == s.leech_index) s.leech_seconds = elapsed(t0);
  }
  return s;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

CriterionResult census(const Suite& s) {
  CriterionResult r{2, "minimal-vector census", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  for (std::size_t i = 0; i < s.lattices.size(); ++i) {
    if (s.minvecs[i].count != s.expected_counts[i]) {
      r.pass = false;
      detail << s.lattices[i].name << " count " << s.minvecs[i].count << " != "
             << s.expected_counts[i] << "; ";
    }
  }
  if (s.leech_seconds > 900.0) {
    r.pass = false;
    detail << "Leech enumeration took " << fmt(s.leech_seconds) << "s > 900s; ";
  }
  if (r.pass)
    detail << "all counts exact, Leech in " << fmt(s.leech_seconds) << "s";
  r.detail = detail.str();
  r.seconds = elapsed(t0) + s.leech_seconds;
  return r;
}

CriterionResult classification_table(const Suite& s) {
  CriterionResult r{1, "classification table", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      r.pass = false;
      detail << what << "; ";
    }
  };

  for (std::size_t n = 2; n <= 8; ++n) {
    const std::string name = "A" + std::to_string(n);
    auto cfg = unit_configuration(s.lat(name), s.mv(name));
    auto rep = classify(cfg);
    expect(rep.minimally_extreme, name + " not minimally extreme");
  }
  {
    auto cfg = unit_configuration(s.lat("D3"), s.mv("D3"));
    auto rep = classify(cfg);
    expect(rep.minimally_extreme && s.mv("D3").count == 12,
           "D3 not minimally extreme with 12 vectors");
  }
  for (std::size_t n = 4; n <= 8; ++n) {
    const std::string name = "D" + std::to_string(n);
    auto cfg = unit_configuration(s.lat(name), s.mv(name));
    ClassifyOptions opts;
    opts.check_redundancy = true;
    auto rep = classify(cfg, opts);
    expect(rep.redundantly_semi_eutactic.value_or(false),
           name + " not redundantly semi-eutactic");
    expect(!rep.redundantly_extreme.value_or(true), name + " redundantly extreme");
  }
  for (int n : {6, 7, 8}) {
    const std::string name = "E" + std::to_string(n);
    auto cfg = unit_configuration(s.lat(name), s.mv(name));
    ClassifyOptions opts;
    opts.check_redundancy = true;
    auto rep = classify(cfg, opts);
    expect(rep.redundantly_extreme.value_or(false), name + " not redundantly extreme");
  }
  {
    const Lattice& lat = s.lattices[s.leech_index];
    const MinimalVectors& mv = s.minvecs[s.leech_index];
    auto cfg = unit_configuration(lat, mv);
    ClassifyOptions opts;
    opts.check_redundancy = true;
    opts.certificate_subset = leech_two_coordinate_pairs(lat, mv);
    expect(opts.certificate_subset.size() == 552, "Leech D24 subset size mismatch");
    auto rep = classify(cfg, opts);
    expect(rep.perfect && rep.perfection_prime != 0, "Leech perfection not certified mod p");
    expect(rep.redundantly_extreme.value_or(false), "Leech not redundantly extreme");
  }
  r.seconds = elapsed(t0);
  if (r.seconds > 600.0) {
    r.pass = false;
    detail << "runtime " << fmt(r.seconds) << "s > 600s; ";
  }
  if (r.pass) detail << "Lemma-1 table reproduced exactly in " << fmt(r.seconds) << "s";
  r.detail = detail.str();
  return r;
}

CriterionResult uniform_eutaxy_all(const Suite& s) {
  CriterionResult r{3, "uniform eutaxy coefficients n/|S|", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  for (std::size_t i = 0; i < s.lattices.size(); ++i) {
    auto cfg = unit_configuration(s.lattices[i], s.minvecs[i]);
    if (!verify_uniform_eutaxy(cfg)) {
      r.pass = false;
      detail << s.lattices[i].name << " fails; ";
    }
  }
  if (r.pass) detail << "exact identity holds for all " << s.lattices.size() << " lattices";
  r.detail = detail.str();
  r.seconds = elapsed(t0);
  return r;
}

CriterionResult e6_reduced(const Suite& s) {
  CriterionResult r{4, "E6 reduced configuration", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  auto cfg = unit_configuration(s.lat("E6"), s.mv("E6"));
  // Coefficients 1/15, 1/10, 0 by inner-product class against pair 0.
  std::vector<Rational> ups(cfg.pair_count());
  std::size_t n0 = 0, nh = 0, n1 = 0;
  for (std::size_t p = 0; p < cfg.pair_count(); ++p) {
    Rational ip = abs(cfg.unit_inner(p, 0));
    if (ip == Rational(0)) { ups[p] = Rational(1, 15); ++n0; }
    else if (ip == Rational(1, 2)) { ups[p] = Rational(1, 10); ++nh; }
    else if (ip == Rational(1)) { ups[p] = Rational(0); ++n1; }
    else {
      r.pass = false;
      detail << "unexpected inner product " << ip.str() << "; ";
    }
  }
  if (!verify_eutaxy_coefficients(cfg, ups)) {
    r.pass = false;
    detail << "class coefficients do not satisfy the eutaxy identity; ";
  }
  if (!is_perfect(cfg.without_pair(0))) {
    r.pass = false;
    detail << "reduced configuration not perfect; ";
  }
  if (r.pass)
    detail << "classes (0, 1/2, 1) sized " << n0 << "/" << nh << "/" << n1
           << ", identity exact, reduced configuration perfect";
  r.detail = detail.str();
  r.seconds = elapsed(t0);
  return r;
}

CriterionResult golay_check() {
  CriterionResult r{5, "Golay code", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  try {
    GolayCode code = build_golay();
    auto hist = weight_distribution(code);
    long total = 0;
    for (auto& [w, c] : hist) total += c;
    int min_pos = 0;
    for (auto& [w, c] : hist)
      if (w > 0) { min_pos = w; break; }
    bool dist_ok = hist[0] == 1 && hist[8] == 759 && hist[12] == 2576 &&
                   hist[16] == 759 && hist[24] == 1 && hist.size() == 5;
    if (total != 4096 || min_pos != 8 || !dist_ok) {
      r.pass = false;
      detail << "distribution mismatch; ";
    } else {
      detail << "4096 words, weights {0:1, 8:759, 12:2576, 16:759, 24:1}";
    }
  } catch (const std::exception& e) {
    r.pass = false;
    detail << "construction failed: " << e.what();
  }
  r.detail = detail.str();
  r.seconds = elapsed(t0);
  return r;
}

CriterionResult multipliers() {
  CriterionResult r{6, "multiplier coefficients", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  if (multiplier_c_exact(2) != Rational(0)) {
    r.pass = false;
    detail << "c_2 != 0; ";
  }
  double c10 = 0.0;
  for (int l = 4; l <= 200; l += 2) {
    Rational c = multiplier_c_exact(l);
    double cf = c.to_double();
    if (c == Rational(0)) {
      r.pass = false;
      detail << "c_" << l << " = 0; ";
    }
    if (l == 10) {
      c10 = std::fabs(cf);
      if (!(c10 >= 1e-4 && c10 <= 1e-2)) {
        r.pass = false;
        detail << "|c_10| = " << fmt(c10) << " outside [1e-4, 1e-2]; ";
      }
    } else if (!(std::fabs(cf) > 0.2)) {
      r.pass = false;
      detail << "|c_" << l << "| = " << fmt(std::fabs(cf)) << " <= 0.2; ";
    }
  }
  auto residues = legendre_q_mod8(1000);
  for (int l = 3; l <= 1000; ++l) {
    if (residues[l] != 4) {
      r.pass = false;
      detail << "mod-8 residue at l=" << l << " is " << residues[l] << "; ";
      break;
    }
  }
  if (r.pass)
    detail << "c_2 = 0 exactly, c_l != 0 and |c_l| > 0.2 on even [4,200] \\ {10}, |c_10| = "
           << fmt(c10) << ", mod-8 residue 4 up to l = 1000";
  r.detail = detail.str();
  r.seconds = elapsed(t0);
  return r;
}

CriterionResult operator_identities() {
  CriterionResult r{7, "multiplier operator identities", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  std::mt19937_64 rng(20240717);
  auto rand_unit = [&rng]() {
    double z = 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
    double phi = 2.0 * M_PI * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
    double st = std::sqrt(std::max(0.0, 1.0 - z * z));
    return SphPoint{st * std::cos(phi), st * std::sin(phi), z};
  };
  std::vector<SphPoint> pts(100);
  for (auto& p : pts) p = rand_unit();

  double worst = 0.0;
  for (int l = 0; l <= 20 && r.pass; l += 2) {
    double cl = multiplier_c(l);
    for (int m = -l; m <= l; ++m) {
      EvenHarmonic f(l);
      f.coeff(l, m) = 1.0;
      for (const auto& p : pts) {
        double got = phi_point(f, p);
        double want = cl * real_sh(l, m, p);
        worst = std::max(worst, std::fabs(got - want));
      }
    }
  }
  if (worst > 1e-10) {
    r.pass = false;
    detail << "phi_point deviates from c_l scaling by " << fmt(worst) << "; ";
  }

  EvenHarmonic f(20);
  for (int l = 0; l <= 20; l += 2) {
    if (l == 2) continue;
    for (int m = -l; m <= l; ++m)
      f.coeff(l, m) = 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
  }
  EvenHarmonic g = psi_apply(phi_apply(f));
  double worst2 = 0.0;
  for (int l = 0; l <= 20; l += 2)
    for (int m = -l; m <= l; ++m)
      worst2 = std::max(worst2, std::fabs(g.coeff(l, m) - f.coeff(l, m)));
  if (worst2 > 1e-12) {
    r.pass = false;
    detail << "Psi o Phi identity off by " << fmt(worst2) << "; ";
  }
  if (r.pass)
    detail << "phi_point matches c_l scaling to " << fmt(worst)
           << ", Psi o Phi = Id to " << fmt(worst2);
  r.detail = detail.str();
  r.seconds = elapsed(t0);
  return r;
}

CriterionResult lemma7_fixed_point() {
  CriterionResult r{8, "quadratic-removal fixed point", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  int worst_iters = 0;
  double worst_resid = 0.0, worst_mean = 0.0;
  for (std::uint64_t seed = 1; seed <= 20 && r.pass; ++seed) {
    RadialBody base = random_body(seed, 6, 0.004);
    std::mt19937_64 rng(seed * 77 + 1);
    auto u = [&rng]() {
      return 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
    };
    EvenHarmonic rho = base.rho;
    rho.coeff(0, 0) = 0.005 * u();
    for (int m = -2; m <= 2; ++m) rho.coeff(2, m) = 0.002 * u();
    RadialBody injected = make_radial_body(std::move(rho), 0.02);
    try {
      QuadraticRemoval qr = remove_quadratic(injected);
      worst_iters = std::max(worst_iters, qr.iterations);
      worst_resid = std::max(worst_resid, qr.body.rho.degree_norm(2));
      worst_mean = std::max(worst_mean, std::fabs(qr.body.rho.mean()));
      if (qr.iterations > 50 || qr.body.rho.degree_norm(2) > 1e-9 ||
          std::fabs(qr.body.rho.mean()) > 1e-12) {
        r.pass = false;
        detail << "seed " << seed << ": iters " << qr.iterations << ", |pi2| "
               << fmt(qr.body.rho.degree_norm(2)) << "; ";
      }
    } catch (const std::exception& e) {
      r.pass = false;
      detail << "seed " << seed << ": " << e.what() << "; ";
    }
  }
  if (r.pass)
    detail << "20 bodies converged, max iterations " << worst_iters << ", max |pi2| "
           << fmt(worst_resid) << ", max |mean-1| " << fmt(worst_mean);
  r.detail = detail.str();
  r.seconds = elapsed(t0);
  return r;
}

CriterionResult packing_baseline(const Suite& s) {
  CriterionResult r{9, "packing baseline", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  Rational det_d3 = det_exact(s.lat("D3").gram);
  if (det_d3 != Rational(1, 2)) {
    r.pass = false;
    detail << "det Gram(D3) = " << det_d3.str() << " != 1/2; ";
  }
  double d3 = std::sqrt(det_d3.to_double());
  double phi3 = (4.0 * M_PI / 3.0) / (8.0 * d3);
  if (std::fabs(phi3 - M_PI / std::sqrt(18.0)) > 1e-12) {
    r.pass = false;
    detail << "phi(B3) = " << fmt(phi3) << "; ";
  }
  Rational det_a2 = det_exact(s.lat("A2").gram);
  if (det_a2 != Rational(3, 4)) {
    r.pass = false;
    detail << "det Gram(A2) = " << det_a2.str() << " != 3/4; ";
  }
  double phi2 = (M_PI / 4.0) / std::sqrt(det_a2.to_double());
  if (std::fabs(phi2 - 0.9069) > 5e-5) {
    r.pass = false;
    detail << "phi(B2) = " << fmt(phi2) << " not 0.9068...; ";
  }
  if (r.pass)
    detail << "phi(B3) = " << fmt(phi3) << " = pi/sqrt(18), phi(B2) = " << fmt(phi2);
  r.detail = detail.str();
  r.seconds = elapsed(t0);
  return r;
}

CriterionResult main_theorem_desk() {
  CriterionResult r{10, "local pessimum at desk scale", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  constexpr std::size_t kBodies = 100;
  constexpr std::size_t kRotations = 2000;
  const int bands[3] = {4, 6, 8};
  std::vector<PessimumVerdict> verdicts(kBodies);
  std::vector<std::string> errors(kBodies);
  parallel_for(kBodies, [&](std::size_t i) {
    std::uint64_t seed = i + 1;
    try {
      RadialBody body = random_body(seed, bands[i % 3], 0.01);
      verdicts[i] = verify_pessimum(body, kRotations, 60, seed);
      verdicts[i].seed = seed;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  std::vector<double> ratios;
  for (std::size_t i = 0; i < kBodies; ++i) {
    if (!errors[i].empty()) {
      r.pass = false;
      detail << "seed " << i + 1 << ": " << errors[i] << "; ";
      continue;
    }
    if (!verdicts[i].ok) {
      r.pass = false;
      detail << "seed " << i + 1 << ": phi_lower = " << fmt(verdicts[i].phi_lower)
             << " <= phi(B3); ";
    }
    ratios.push_back(verdicts[i].ratio);
  }
  if (!ratios.empty()) {
    std::sort(ratios.begin(), ratios.end());
    double mn = ratios.front();
    double median = ratios[ratios.size() / 2];
    if (!(mn > 0.0)) {
      r.pass = false;
      detail << "min ratio " << fmt(mn) << " not positive; ";
    }
    if (!(5.0 * mn >= median)) {
      r.pass = false;
      detail << "min/median spread " << fmt(median / mn) << " exceeds 5; ";
    }
    if (r.pass)
      detail << kBodies << " bodies all beat pi/sqrt(18); -delta/l1 in ["
             << fmt(mn) << ", " << fmt(ratios.back()) << "], median " << fmt(median);
  }
  r.seconds = elapsed(t0);
  if (r.seconds > 1800.0) {
    r.pass = false;
    detail << "runtime " << fmt(r.seconds) << "s > 1800s; ";
  }
  r.detail = detail.str();
  return r;
}

CriterionResult support_inequality() {
  CriterionResult r{11, "support-body determinant bound", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  constexpr std::size_t kTrials = 100;
  double cfit = 0.0;
  std::size_t admissible = 0;
  std::vector<double> excess(kTrials), scale(kTrials);
  for (std::size_t i = 0; i < kTrials; ++i) {
    SupportBody body = random_support_body(i + 1, 6, 0.005);
    MatD rot = random_rotation(500 + i);
    AdmissibleResult res = construct_support(body, rot);
    if (res.admissible) ++admissible;
    const auto& cfg = d3_configuration();
    double sum_ue = 0.0, max_eta2 = 0.0;
    for (std::size_t p = 0; p < cfg.pair_count(); ++p) {
      VecD rx = mat_vec(rot, cfg.unit(p));
      double eta = body.eta.eval(sph_point(rx[0], rx[1], rx[2]));
      sum_ue += 2.0 * 0.25 * eta;  // upsilon = 1/4 per vector
      max_eta2 = std::max(max_eta2, eta * eta);
    }
    excess[i] = res.det_ratio - 1.0 - sum_ue;
    scale[i] = max_eta2;
    if (max_eta2 > 0.0) cfit = std::max(cfit, excess[i] / max_eta2);
  }
  if (admissible != kTrials) {
    r.pass = false;
    detail << admissible << "/" << kTrials << " trials admissible; ";
  }
  for (std::size_t i = 0; i < kTrials; ++i) {
    if (excess[i] > cfit * scale[i] + 1e-15) {
      r.pass = false;
      detail << "trial " << i + 1 << " violates the fitted bound; ";
    }
  }
  if (!std::isfinite(cfit)) {
    r.pass = false;
    detail << "fitted C not finite; ";
  }
  if (r.pass)
    detail << kTrials << "/" << kTrials << " admissible, fitted C = " << fmt(cfit);
  r.detail = detail.str();
  r.seconds = elapsed(t0);
  return r;
}

CriterionResult theorem2_witnesses(const Suite& s) {
  CriterionResult r{12, "shrink witnesses and expansion bound", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  for (const char* name : {"D4", "D5"}) {
    auto cfg = unit_configuration(s.lat(name), s.mv(name));
    try {
      ShrinkWitness w = shrink_witness(cfg.without_pair(0));
      if (!(w.det_t < 1.0) || w.min_stretch < 1.0 - 1e-12) {
        r.pass = false;
        detail << name << " witness postconditions fail; ";
      }
    } catch (const std::exception& e) {
      r.pass = false;
      detail << name << ": " << e.what() << "; ";
    }
  }

  const auto& cfg3 = d3_configuration();
  std::mt19937_64 rng(424242);
  auto u = [&rng]() {
    return 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
  };
  std::size_t accepted = 0;
  double min_ratio = 1e300;
  std::size_t draws = 0;
  while (accepted < 10000 && draws < 5000000) {
    ++draws;
    MatD t = MatD::identity(3);
    for (auto& x : t.e) x += 0.04 * u();
    if (frob_dist_identity(t) > 0.05) continue;
    bool ok = true;
    for (std::size_t p = 0; p < cfg3.pair_count() && ok; ++p)
      if (norm2(mat_vec(t, cfg3.unit(p))) < 1.0) ok = false;
    if (!ok) continue;
    auto chk = expansion_check(cfg3, t);
    if (chk.rhs < 1e-14) continue;
    min_ratio = std::min(min_ratio, chk.lhs / chk.rhs);
    ++accepted;
  }
  if (accepted < 10000) {
    r.pass = false;
    detail << "only " << accepted << " admissible samples; ";
  } else if (!(min_ratio > 0.0)) {
    r.pass = false;
    detail << "min (det T - 1)/||T^T T - Id|| = " << fmt(min_ratio) << " not positive; ";
  }
  if (r.pass)
    detail << "witnesses valid; min expansion ratio over 10^4 samples = " << fmt(min_ratio);
  r.detail = detail.str();
  r.seconds = elapsed(t0);
  return r;
}

CriterionResult rotation_averaging() {
  CriterionResult r{13, "fiber-averaging identity", true, 0.0, ""};
  auto t0 = Clock::now();
  std::ostringstream detail;
  double worst_sigma = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RadialBody body = random_body(seed, 6, 0.01);
    MatD ry = random_rotation(900 + seed);
    SphPoint y = sph_point(ry.at(0, 2), ry.at(1, 2), ry.at(2, 2));
    FiberAverage fa = fiber_average(body, y, 20000, 1234 + seed);
    double sigmas = std::fabs(fa.mean - fa.predicted) / std::max(fa.stderr_, 1e-300);
    worst_sigma = std::max(worst_sigma, sigmas);
    if (sigmas > 3.0) {
      r.pass = false;
      detail << "seed " << seed << ": |mean - 2 Phi rho(y)| = " << fmt(sigmas)
             << " standard errors; ";
    }
  }
  if (r.pass) detail << "10 bodies within 3 standard errors, worst " << fmt(worst_sigma);
  r.detail = detail.str();
  r.seconds = elapsed(t0);
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  Suite suite = build_suite();
  std::vector<CriterionResult> results;
  results.push_back(census(suite));
  results.push_back(classification_table(suite));
  results.push_back(uniform_eutaxy_all(suite));
  results.push_back(e6_reduced(suite));
  results.push_back(golay_check());
  results.push_back(multipliers());
  results.push_back(operator_identities());
  results.push_back(lemma7_fixed_point());
  results.push_back(packing_baseline(suite));
  results.push_back(main_theorem_desk());
  results.push_back(support_inequality());
  results.push_back(theorem2_witnesses(suite));
  results.push_back(rotation_averaging());
  std::sort(results.begin(), results.end(),
            [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
  return results;
}

}  // namespace latpack
