#include "latpack/rational.hpp"

namespace latpack {

namespace {

// The mpz_class string constructor auto-detects the base; force decimal.
BigInt parse_decimal_int(const std::string& s) {
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("Rational::parse: bad integer '" + s + "'");
  return v;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_decimal_int(s.substr(0, slash));
    BigInt den = parse_decimal_int(s.substr(slash + 1));
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0) throw std::invalid_argument("Rational::parse: bad decimal");
    BigInt num = parse_decimal_int(digits);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    return Rational(num, den);
  }
  return Rational(parse_decimal_int(s));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace latpack
