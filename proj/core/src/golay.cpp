#include "latpack/golay.hpp"

#include <bit>
#include <stdexcept>

namespace latpack {

std::vector<std::uint32_t> GolayCode::codewords() const {
  std::vector<std::uint32_t> words(1u << kDim);
  for (std::uint32_t u = 0; u < (1u << kDim); ++u) {
    std::uint32_t w = 0;
    for (int i = 0; i < kDim; ++i)
      if (u >> i & 1u) w ^= rows_[i];
    words[u] = w;
  }
  return words;
}

bool GolayCode::contains(std::uint32_t word) const {
  std::uint32_t info = word & 0xfffu;
  std::uint32_t parity = 0;
  for (int i = 0; i < kDim; ++i)
    if (info >> i & 1u) parity ^= b_rows_[i];
  return parity == (word >> kDim);
}

GolayCode build_golay() {
  // Quadratic-residue generator polynomial of the [23,12,7] code.
  constexpr std::uint32_t kGenPoly = (1u << 0) | (1u << 2) | (1u << 4) |
                                     (1u << 5) | (1u << 6) | (1u << 10) |
                                     (1u << 11);
  std::array<std::uint32_t, GolayCode::kDim> rows{};
  for (int i = 0; i < GolayCode::kDim; ++i) {
    std::uint32_t r = kGenPoly << i;  // shifts stay within 23 bits
    if (std::popcount(r) & 1) r |= 1u << 23;  // overall parity bit
    rows[i] = r;
  }

  // Row reduce to [I12 | B]; columns 0..11 are unit-lower-triangular already.
  for (int c = 0; c < GolayCode::kDim; ++c) {
    int p = c;
    while (p < GolayCode::kDim && !(rows[p] >> c & 1u)) ++p;
    if (p == GolayCode::kDim) throw std::runtime_error("golay: singular generator");
    std::swap(rows[c], rows[p]);
    for (int i = 0; i < GolayCode::kDim; ++i)
      if (i != c && (rows[i] >> c & 1u)) rows[i] ^= rows[c];
  }

  GolayCode code;
  code.rows_ = rows;
  for (int i = 0; i < GolayCode::kDim; ++i) code.b_rows_[i] = rows[i] >> GolayCode::kDim;

  // Self-check: exact weight distribution and self-duality.
  std::array<long, 25> hist{};
  for (std::uint32_t w : code.codewords()) ++hist[std::popcount(w)];
  const std::array<long, 25> want = [] {
    std::array<long, 25> h{};
    h[0] = 1;
    h[8] = 759;
    h[12] = 2576;
    h[16] = 759;
    h[24] = 1;
    return h;
  }();
  if (hist != want) throw std::runtime_error("golay: weight distribution self-check failed");
  for (int i = 0; i < GolayCode::kDim; ++i)
    for (int j = 0; j < GolayCode::kDim; ++j)
      if (std::popcount(rows[i] & rows[j]) & 1)
        throw std::runtime_error("golay: self-duality check failed");
  return code;
}

std::map<int, long> weight_distribution(const GolayCode& code) {
  std::map<int, long> hist;
  for (std::uint32_t w : code.codewords()) ++hist[std::popcount(w)];
  return hist;
}

}  // namespace latpack
