// Extended binary Golay code [24,12,8].
//
// Built from the length-23 quadratic-residue cyclic code (generator polynomial
// x^11+x^10+x^6+x^5+x^4+x^2+1, exponents the QR set mod 23), extended by an
// overall parity bit and row-reduced to systematic form [I12 | B]. The
// construction self-checks its weight distribution and aborts on mismatch.
//
// Systematic B rows (bit 0 = column 13 of the generator, hex):
//   0xc75, 0x49f, 0xd4b, 0x6e3, 0x9b3, 0xb66,
//   0xecc, 0x1ed, 0x3da, 0x7b4, 0xb1d, 0xe3a
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace latpack {

class GolayCode {
 public:
  static constexpr int kLength = 24;
  static constexpr int kDim = 12;

  // Row i of the systematic generator [I12 | B], bits 0..23.
  const std::array<std::uint32_t, kDim>& generator() const { return rows_; }

  // All 2^12 codewords, generated on demand.
  std::vector<std::uint32_t> codewords() const;

  bool contains(std::uint32_t word) const;

 private:
  friend GolayCode build_golay();
  std::array<std::uint32_t, kDim> rows_{};
  std::array<std::uint32_t, kDim> b_rows_{};  // B part only, bits 0..11
};

// Deterministic construction; throws std::runtime_error if the self-check
// (weight distribution, self-duality) fails.
GolayCode build_golay();

// Exhaustive weight histogram over all 4096 codewords.
std::map<int, long> weight_distribution(const GolayCode& code);

}  // namespace latpack
