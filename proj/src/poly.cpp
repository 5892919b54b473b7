#include "kstab/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace kstab {

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::t() { return Poly{Rational(0), Rational(1)}; }

Poly Poly::monomial(const Rational& c, unsigned k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Rational Poly::integrate(const Rational& lo, const Rational& hi) const {
  if (lo > hi) {
    throw std::invalid_argument("integration bounds out of order: " + lo.str() + " > " +
                                hi.str());
  }
  // Horner on the antiderivative sum_i c_i x^{i+1} / (i+1).
  auto antiderivative = [this](const Rational& x) {
    Rational acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc *= x;
      acc += coeffs_[i] / Rational(static_cast<long>(i + 1));
    }
    return acc * x;
  };
  return antiderivative(hi) - antiderivative(lo);
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    const Rational& c = p.coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag;
    if (i >= 1) os << (unit ? "t" : "*t");
    if (i >= 2) os << "^" << i;
  }
  return os;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(1);
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

}  // namespace kstab
