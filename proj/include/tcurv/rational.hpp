#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace tcurv {

/// Exact rational scalar. Canonical form is an invariant: denominator > 0
/// and gcd(|numerator|, denominator) = 1. All arithmetic is exact.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);

  /// Parses the text form: optional '-', digits, optional '/' + digits.
  /// Throws std::invalid_argument on anything else (including "p/0").
  static Rational parse(std::string_view text);

  /// Canonical text form: "p" or "p/q" with q > 1.
  std::string str() const;

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  /// Underlying GMP value (canonical). Exposed for tests and interop.
  const mpq_class& raw() const { return v_; }

private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

}  // namespace tcurv
