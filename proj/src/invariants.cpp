#include "kstab/invariants.hpp"

#include <stdexcept>

namespace kstab {

namespace {

Classification classify_from_betas(const Construction& c, const Rational& beta_v0,
                                   const Rational& beta_vinf) {
  if (c.l() == Rational(2)) return ReducesToPair{coefficient_a(c.n(), c.r())};
  if (beta_v0.sign() < 0 && beta_vinf.sign() >= 0) {
    return KUnstable{HorizontalDivisor::ZeroSection, beta_v0};
  }
  if (beta_vinf.sign() < 0 && beta_v0.sign() >= 0) {
    return KUnstable{HorizontalDivisor::InfinitySection, beta_vinf};
  }
  throw std::logic_error("no unique destabilizing horizontal divisor at l != 2 (beta(V0) = " +
                         beta_v0.str() + ", beta(Vinf) = " + beta_vinf.str() + ")");
}

}  // namespace

Rational s_invariant(const Construction& c, HorizontalDivisor d) {
  Rational integral;
  for (const VolumePiece& piece : volume_profile(c, d)) {
    integral += piece.volume.integrate(piece.t_lo, piece.t_hi);
  }
  return integral / top_power(c, derived_classes(c).anti_k).eval(Rational(0));
}

Rational beta(const Construction& c, HorizontalDivisor d) {
  return Rational(1) - s_invariant(c, d);
}

Rational coefficient_a(unsigned n, const Rational& r) {
  if (n < 2) throw std::invalid_argument("dimension n must be >= 2, got " + std::to_string(n));
  if (r <= Rational(1)) throw std::invalid_argument("index r must be > 1, got " + r.str());
  const Rational one(1);
  const Rational np1(static_cast<long>(n + 1));
  const Rational rm1 = r - one;
  const Rational num = pow(r, n + 1) - pow(rm1, n + 1) - np1 * pow(rm1, n);
  const Rational den = Rational(2) * np1 * (pow(r, n) - pow(rm1, n));
  return num / den;
}

bool futaki_check(const Construction& c) {
  if (c.l() != Rational(2)) {
    throw std::invalid_argument("Futaki vanishing applies only at l = 2, got l = " + c.l().str());
  }
  return beta(c, HorizontalDivisor::ZeroSection).is_zero() &&
         beta(c, HorizontalDivisor::InfinitySection).is_zero();
}

Classification classify(const Construction& c) {
  return classify_from_betas(c, beta(c, HorizontalDivisor::ZeroSection),
                             beta(c, HorizontalDivisor::InfinitySection));
}

InvariantReport report(const Construction& c) {
  InvariantReport out;
  out.vol_y = top_power(c, derived_classes(c).anti_k).eval(Rational(0));
  out.s_v0 = s_invariant(c, HorizontalDivisor::ZeroSection);
  out.s_vinf = s_invariant(c, HorizontalDivisor::InfinitySection);
  out.beta_v0 = Rational(1) - out.s_v0;
  out.beta_vinf = Rational(1) - out.s_vinf;
  out.classification = classify_from_betas(c, out.beta_v0, out.beta_vinf);
  return out;
}

}  // namespace kstab
