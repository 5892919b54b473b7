#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

/// Dense univariate polynomial in t with exact rational coefficients.
/// coeffs()[i] is the coefficient of t^i; trailing zeros are never stored, so
/// the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  /// The polynomial t.
  static Poly t();
  /// c * t^k
  static Poly monomial(const Rational& c, unsigned k);

  std::span<const Rational> coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^i (zero past the degree).
  Rational coeff(std::size_t i) const;

  Rational eval(const Rational& x) const;
  /// Exact definite integral over [lo, hi]. Throws std::invalid_argument if lo > hi.
  Rational integrate(const Rational& lo, const Rational& hi) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly pow(const Poly& base, unsigned exponent);

}  // namespace kstab
