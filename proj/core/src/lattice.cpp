#include "latpack/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "latpack/golay.hpp"

namespace latpack {

namespace {

MatD gram_to_float(const RatMatrix& g) {
  MatD f(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) f.at(i, j) = g.at(i, j).to_double();
  return f;
}

Lattice finish(std::string name, RatMatrix gram, MatD embed) {
  Lattice lat;
  lat.name = std::move(name);
  lat.dim = gram.rows();
  lat.gram = std::move(gram);
  lat.embed = std::move(embed);
  if (!lat.gram.is_symmetric())
    throw std::invalid_argument(lat.name + ": Gram matrix not symmetric");
  if (!leading_minors_positive(lat.gram))
    throw std::invalid_argument(lat.name + ": Gram matrix not positive definite");
  // Embedding consistency.
  double err = 0.0;
  for (std::size_t i = 0; i < lat.dim; ++i)
    for (std::size_t j = 0; j < lat.dim; ++j) {
      double dotv = 0.0;
      for (std::size_t k = 0; k < lat.dim; ++k)
        dotv += lat.embed.at(i, k) * lat.embed.at(j, k);
      double d = dotv - lat.gram.at(i, j).to_double();
      err += d * d;
    }
  if (std::sqrt(err) > 1e-10)
    throw std::invalid_argument(lat.name + ": embedding disagrees with Gram");
  return lat;
}

Lattice from_dynkin(std::string name, std::size_t n,
                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g.at(i, i) = 1;
  for (auto [i, j] : edges) {
    g.at(i, j) = Rational(-1, 2);
    g.at(j, i) = Rational(-1, 2);
  }
  MatD embed = cholesky(gram_to_float(g));
  return finish(std::move(name), std::move(g), std::move(embed));
}

// Gram and embedding from an integer row basis scaled by 1/sqrt(denom).
Lattice from_scaled_int_basis(std::string name, const IntRows& basis, long denom) {
  const std::size_t n = basis.size();
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt s = 0;
      for (std::size_t k = 0; k < n; ++k) s += basis[i][k] * basis[j][k];
      g.at(i, j) = Rational(s, BigInt(denom));
    }
  MatD embed(n, n);
  double scale = 1.0 / std::sqrt(static_cast<double>(denom));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      embed.at(i, j) = basis[i][j].get_d() * scale;
  return finish(std::move(name), std::move(g), std::move(embed));
}

}  // namespace

Lattice root_a(std::size_t n) {
  if (n < 2) throw std::invalid_argument("root_a: need n >= 2");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_dynkin("A" + std::to_string(n), n, edges);
}

Lattice root_d(std::size_t n) {
  if (n < 3) throw std::invalid_argument("root_d: need n >= 3");
  // Basis e1-e2, e2-e3, ..., e_{n-1}-e_n, e_{n-1}+e_n, rows scaled by 2^{-1/2}.
  IntRows basis(n, IntRow(n, BigInt(0)));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    basis[i][i] = 1;
    basis[i][i + 1] = -1;
  }
  basis[n - 1][n - 2] = 1;
  basis[n - 1][n - 1] = 1;
  return from_scaled_int_basis("D" + std::to_string(n), basis, 2);
}

Lattice root_e(std::size_t n) {
  if (n != 6 && n != 7 && n != 8) throw std::invalid_argument("root_e: need n in {6,7,8}");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);  // chain 1..n-1
  edges.emplace_back(n - 4, n - 1);  // branch node attaches three from the end
  return from_dynkin("E" + std::to_string(n), n, edges);
}

Lattice leech() {
  GolayCode code = build_golay();  // aborts on self-check failure
  constexpr std::size_t n = 24;
  // Generators in units of 2^{-5/2}: doubled Golay lifts, 4x the D24 basis,
  // and the glue vector (-3,1,...,1).
  IntRows gens;
  for (int i = 0; i < GolayCode::kDim; ++i) {
    IntRow row(n, BigInt(0));
    for (std::size_t j = 0; j < n; ++j)
      if (code.generator()[i] >> j & 1u) row[j] = 2;
    gens.push_back(std::move(row));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntRow row(n, BigInt(0));
    row[i] = 4;
    row[i + 1] = -4;
    gens.push_back(std::move(row));
  }
  {
    IntRow row(n, BigInt(0));
    row[n - 2] = 4;
    row[n - 1] = 4;
    gens.push_back(std::move(row));
  }
  {
    IntRow row(n, BigInt(1));
    row[0] = -3;
    gens.push_back(std::move(row));
  }
  IntRows basis = hnf_basis(std::move(gens), n);
  if (basis.size() != n) throw std::runtime_error("leech: generators do not span");
  BigInt det = 1;
  for (std::size_t i = 0; i < n; ++i) det *= basis[i][i];
  BigInt want;
  mpz_ui_pow_ui(want.get_mpz_t(), 2, 36);
  if (det != want) throw std::runtime_error("leech: determinant certificate failed");
  return from_scaled_int_basis("Leech", basis, 32);
}

Lattice lattice_by_name(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "leech" || s == "lambda24" || s == "l24") return leech();
  if (s.size() >= 2 && (s[0] == 'a' || s[0] == 'd' || s[0] == 'e') &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    std::size_t n = std::stoul(s.substr(1));
    if (s[0] == 'a') return root_a(n);
    if (s[0] == 'd') return root_d(n);
    return root_e(n);
  }
  return lattice_from_file(name);
}

Lattice lattice_from_gram(std::string name, RatMatrix gram) {
  // Exact validation first; the float Cholesky would reject indefinite input
  // with a less useful error.
  if (!gram.is_symmetric())
    throw std::invalid_argument(name + ": Gram matrix not symmetric");
  if (!leading_minors_positive(gram))
    throw std::invalid_argument(name + ": Gram matrix not positive definite");
  MatD embed = cholesky(gram_to_float(gram));
  return finish(std::move(name), std::move(gram), std::move(embed));
}

std::vector<std::size_t> leech_two_coordinate_pairs(const Lattice& lat,
                                                    const MinimalVectors& mv) {
  if (lat.dim != 24) throw std::invalid_argument("leech_two_coordinate_pairs: not a Leech lattice");
  std::vector<std::size_t> idx;
  const double scale = std::sqrt(32.0);
  for (std::size_t p = 0; p < mv.coords.size(); ++p) {
    const auto& c = mv.coords[p];
    int support = 0;
    bool clean = true;
    for (std::size_t j = 0; j < lat.dim && clean; ++j) {
      double y = 0.0;
      for (std::size_t i = 0; i < lat.dim; ++i) y += c[i] * lat.embed.at(i, j);
      y *= scale;
      if (std::fabs(y - std::llround(y)) > 1e-6) clean = false;
      long v = std::labs(std::llround(y));
      if (v == 4) ++support;
      else if (v != 0) clean = false;
    }
    if (clean && support == 2) idx.push_back(p);
  }
  return idx;
}

Lattice lattice_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lattice file: " + path);
  auto next_token = [&in]() -> std::string {
    std::string tok;
    while (in >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return tok;
    }
    throw std::runtime_error("lattice file: unexpected end of input");
  };
  std::size_t n = std::stoul(next_token());
  if (n == 0 || n > 64) throw std::runtime_error("lattice file: bad dimension");
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.at(i, j) = Rational::parse(next_token());
  std::string stem = path;
  if (auto pos = stem.find_last_of('/'); pos != std::string::npos) stem = stem.substr(pos + 1);
  return lattice_from_gram(stem, std::move(g));
}

}  // namespace latpack
