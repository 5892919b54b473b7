#include "kstab/geometry.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace kstab {

Construction::Construction(unsigned n, Rational r, Rational l, Rational vol_v)
    : n_(n), r_(std::move(r)), l_(std::move(l)), vol_v_(std::move(vol_v)) {
  if (n_ < 2) throw std::invalid_argument("dimension n must be >= 2, got " + std::to_string(n_));
  if (r_ <= Rational(1)) throw std::invalid_argument("index r must be > 1, got " + r_.str());
  if (l_ < Rational(0)) throw std::invalid_argument("l must be >= 0, got " + l_.str());
  if (l_ >= r_ + Rational(1)) {
    throw std::invalid_argument("l must be < r + 1 = " + (r_ + Rational(1)).str() + ", got " +
                                l_.str());
  }
  if (vol_v_.sign() <= 0) throw std::invalid_argument("vol(V) must be > 0, got " + vol_v_.str());
}

std::ostream& operator<<(std::ostream& os, const Construction& c) {
  return os << "(n=" << c.n_ << ", r=" << c.r_ << ", l=" << c.l_ << ", volV=" << c.vol_v_ << ")";
}

ClassPoly& ClassPoly::operator+=(const ClassPoly& o) {
  v0 += o.v0;
  vinf += o.vinf;
  a += o.a;
  return *this;
}

ClassPoly& ClassPoly::operator-=(const ClassPoly& o) {
  v0 -= o.v0;
  vinf -= o.vinf;
  a -= o.a;
  return *this;
}

ClassPoly& ClassPoly::operator*=(const Poly& s) {
  v0 *= s;
  vinf *= s;
  a *= s;
  return *this;
}

ClassPoly ClassPoly::eval(const Rational& t) const {
  return {Poly(v0.eval(t)), Poly(vinf.eval(t)), Poly(a.eval(t))};
}

std::ostream& operator<<(std::ostream& os, const ClassPoly& x) {
  return os << "(" << x.v0 << ")V0 + (" << x.vinf << ")Vinf + (" << x.a << ")A";
}

DerivedClasses derived_classes(const Construction& c) {
  const Rational inv_r = Rational(1) / c.r();
  const Rational f_a = (c.l() - Rational(1)) / c.r();
  DerivedClasses out;
  out.h = {Poly(1), Poly(), Poly(inv_r)};
  out.e = {Poly(1), Poly(-1), Poly(inv_r)};
  out.f = {Poly(-1), Poly(1), Poly(f_a)};
  out.anti_k = {Poly(1), Poly(1), Poly(1)};
  return out;
}

Poly top_power(const Construction& c, const ClassPoly& x) {
  const unsigned n = c.n();
  const Rational v0_ratio = Rational(-1) / c.r();
  const Rational vinf_ratio = (Rational(1) - c.l()) / c.r();

  // z^{n-k} for k = 0..n
  std::vector<Poly> z_pow(n + 1);
  z_pow[0] = Poly(1);
  for (unsigned i = 1; i <= n; ++i) z_pow[i] = z_pow[i - 1] * x.a;

  Poly total;
  Poly x_pow(1);
  Poly y_pow(1);
  Rational v0_scale(1);
  Rational vinf_scale(1);
  for (unsigned k = 1; k <= n; ++k) {
    x_pow *= x.v0;
    y_pow *= x.vinf;
    const Rational b(binom(n, k));
    total += (b * v0_scale) * (x_pow * z_pow[n - k]);
    total += (b * vinf_scale) * (y_pow * z_pow[n - k]);
    v0_scale *= v0_ratio;
    vinf_scale *= vinf_ratio;
  }
  return total * c.vol_v();
}

Rational vol_x(const Construction& c) {
  const unsigned n = c.n();
  const Rational& r = c.r();
  return (pow(r + Rational(1), n) - pow(r - Rational(1), n)) / pow(r, n - 1) * c.vol_v();
}

Rational vol_y_closed_form(const Construction& c) {
  const unsigned n = c.n();
  const Rational& r = c.r();
  const Rational& l = c.l();
  const Rational one(1);
  Rational bracket = pow(r, n) - pow(r - one, n);
  if (l == one) {
    bracket += Rational(static_cast<long>(n)) * pow(r, n - 1);
  } else {
    bracket += (pow(r, n) - pow(r + one - l, n)) / (l - one);
  }
  return bracket / pow(r, n - 1) * c.vol_v();
}

}  // namespace kstab
