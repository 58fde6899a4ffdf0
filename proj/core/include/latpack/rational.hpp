// Exact rational scalar backing all Gram/eutaxy arithmetic.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latpack {

using BigInt = mpz_class;

// mpz_class has no long long constructor; long is 64-bit on every supported
// platform here.
static_assert(sizeof(long) == sizeof(long long));
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

// Arbitrary-precision rational, always reduced, denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}          // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(long(n)) {}     // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {} // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "p", "p/q", or a decimal like "-0.25".
  static Rational parse(const std::string& s);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  double to_double() const { return v_.get_d(); }
  std::string str() const;  // "p" or "p/q"

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace latpack
