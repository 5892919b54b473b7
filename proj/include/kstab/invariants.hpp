#pragma once

#include <variant>

#include "kstab/geometry.hpp"
#include "kstab/nef_decomposition.hpp"

namespace kstab {

/// l = 2: K-stability of Y is equivalent to that of the log Fano pair (V, a B).
struct ReducesToPair {
  Rational a;
  friend bool operator==(const ReducesToPair&, const ReducesToPair&) = default;
};

/// l != 2: the horizontal divisor with negative beta.
struct KUnstable {
  HorizontalDivisor destabilizer;
  Rational beta;
  friend bool operator==(const KUnstable&, const KUnstable&) = default;
};

using Classification = std::variant<ReducesToPair, KUnstable>;

struct InvariantReport {
  Rational vol_y;
  Rational s_v0;
  Rational s_vinf;
  Rational beta_v0;
  Rational beta_vinf;
  Classification classification;
};

/// S_Y(D) = (1 / vol Y) * integral_0^2 vol(-K_Y - t D) dt.
Rational s_invariant(const Construction& c, HorizontalDivisor d);

/// beta_Y(D) = A_Y(D) - S_Y(D), with A_Y(D) = 1 for a prime divisor on Y.
Rational beta(const Construction& c, HorizontalDivisor d);

/// a(n, r) = (r^{n+1} - (r-1)^{n+1} - (n+1)(r-1)^n) / (2(n+1)(r^n - (r-1)^n)).
/// Throws std::invalid_argument for n < 2 or r <= 1.
Rational coefficient_a(unsigned n, const Rational& r);

/// True iff both horizontal betas vanish. Only meaningful at l = 2; throws
/// std::invalid_argument otherwise.
bool futaki_check(const Construction& c);

/// Decided by the exact sign of the computed betas. Throws std::logic_error
/// if l != 2 and neither beta is negative.
Classification classify(const Construction& c);

InvariantReport report(const Construction& c);

}  // namespace kstab
