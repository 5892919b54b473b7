#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kstab {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& value);

  /// Parses "p" or "p/q" (optional leading '-', decimal digits only).
  /// Throws std::invalid_argument on anything else, including q = 0.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  const mpq_class& raw() const { return value_; }

  /// Canonical lossless form: "p" for integers, otherwise "p/q".
  std::string str() const;

  /// Decimal expansion with `digits` places after the point, rounded half away
  /// from zero. Computed with integer arithmetic only.
  std::string to_decimal(unsigned digits) const;

  /// Display-only conversion.
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& q);

/// Binomial coefficient C(n, k); zero when k > n.
Integer binom(unsigned long n, unsigned long k);

}  // namespace kstab
