#pragma once

#include <iosfwd>

#include "kstab/poly.hpp"
#include "kstab/rational.hpp"

namespace kstab {

/// Parameters of Y = Bl_{B_inf} P_V(L + O_V):
///   n      dimension of Y (V has dimension n - 1)
///   r      -K_V ~ r L, with r > 1
///   l      B ~ l L, with 0 <= l < r + 1
///   vol_v  (-K_V)^{n-1} > 0
class Construction {
 public:
  /// Throws std::invalid_argument naming the violated bound.
  Construction(unsigned n, Rational r, Rational l, Rational vol_v = Rational(1));

  unsigned n() const { return n_; }
  const Rational& r() const { return r_; }
  const Rational& l() const { return l_; }
  const Rational& vol_v() const { return vol_v_; }

  Construction with_l(const Rational& l) const { return {n_, r_, l, vol_v_}; }
  Construction with_vol_v(const Rational& vol_v) const { return {n_, r_, l_, vol_v}; }

  friend bool operator==(const Construction&, const Construction&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Construction& c);

 private:
  unsigned n_;
  Rational r_;
  Rational l_;
  Rational vol_v_;
};

/// A divisor class on Y in the basis {V_0, Vbar_inf, A}, A = pi^* phi^*(-K_V).
/// Coefficients may depend on the Zariski parameter t.
struct ClassPoly {
  Poly v0;
  Poly vinf;
  Poly a;

  ClassPoly& operator+=(const ClassPoly& o);
  ClassPoly& operator-=(const ClassPoly& o);
  ClassPoly& operator*=(const Poly& s);

  friend ClassPoly operator+(ClassPoly x, const ClassPoly& y) { return x += y; }
  friend ClassPoly operator-(ClassPoly x, const ClassPoly& y) { return x -= y; }
  friend ClassPoly operator*(const Poly& s, ClassPoly x) { return x *= s; }
  friend ClassPoly operator*(ClassPoly x, const Poly& s) { return x *= s; }

  bool is_zero() const { return v0.is_zero() && vinf.is_zero() && a.is_zero(); }
  ClassPoly eval(const Rational& t) const;

  friend bool operator==(const ClassPoly&, const ClassPoly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ClassPoly& x);
};

namespace basis {
inline ClassPoly v0() { return {Poly(1), Poly(), Poly()}; }
inline ClassPoly vinf() { return {Poly(), Poly(1), Poly()}; }
inline ClassPoly a() { return {Poly(), Poly(), Poly(1)}; }
}  // namespace basis

struct DerivedClasses {
  ClassPoly h;        // relative hyperplane class, V_0 + (1/r) A
  ClassPoly e;        // exceptional divisor of the blow-up along B_inf
  ClassPoly f;        // strict transform of phi^* B
  ClassPoly anti_k;   // -K_Y
};

/// At l = 0 the returned E and F are the zero class in the Chow ring even
/// though their basis coordinates are nonzero.
DerivedClasses derived_classes(const Construction& c);

/// Top self-intersection X^n, via
///   V_0^k A^{n-k}      = (-1/r)^{k-1} vol(V)
///   Vbar_inf^k A^{n-k} = ((1-l)/r)^{k-1} vol(V)
///   V_0 . Vbar_inf = 0,  A^n = 0.
Poly top_power(const Construction& c, const ClassPoly& x);

/// (-K_X)^n for the unblown bundle X = P_V(L + O_V).
Rational vol_x(const Construction& c);

/// (-K_Y)^n from the closed form, with its separate l = 1 branch.
Rational vol_y_closed_form(const Construction& c);

}  // namespace kstab
