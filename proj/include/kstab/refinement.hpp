#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kstab/geometry.hpp"

namespace kstab {

/// k -> dim H^0(V, kL) for the chosen polarization L of the base.
///
/// `dimension` and `index` describe (V, L) when known: dimension = dim V and
/// index = r with -K_V ~ r L. basis_profile refuses a construction that
/// contradicts either.
struct HilbertFunction {
  std::function<Integer(unsigned long)> eval;
  std::string description;
  std::optional<unsigned> dimension;
  std::optional<Rational> index;

  Integer operator()(unsigned long k) const { return eval(k); }
};

/// O(d) on P^s: h(k) = C(kd + s, s). Index (s + 1)/d.
HilbertFunction hilbert_projective_space(unsigned s, unsigned d);

/// O(1,1) on P^1 x P^1: h(k) = (k + 1)^2. Index 2.
HilbertFunction hilbert_p1xp1();

struct ProfileRow {
  unsigned j;
  Integer n_mj;  // dim of the movable part M_{m,j}
  Integer a_mj;  // multiple of B in the fixed part F_{m,j}
};

/// Weight decomposition of H^0(-mK_Y) refined along Vbar_inf (l = 2).
struct BasisProfile {
  unsigned m;
  std::vector<ProfileRow> rows;  // j = 0..2m

  Integer total() const;  // N_m
};

/// Row j has movable part of degree (m r - |m - j|) L and fixed part
/// max(j - m, 0) B.
/// Throws std::invalid_argument when l != 2, m == 0, m r is not an integer
/// (the message names the stride), or h contradicts (n, r).
BasisProfile basis_profile(const Construction& c, const HilbertFunction& h, unsigned m);

/// a_m = (1 / (m N_m)) sum_j N_{m,j} a_{m,j}.
Rational a_m(const Construction& c, const HilbertFunction& h, unsigned m);

struct ConvergenceRow {
  unsigned m;
  Rational a_m;
  Rational error;  // |a_m - a(n, r)|
};

/// Rows sorted by m, duplicates removed.
std::vector<ConvergenceRow> convergence_table(const Construction& c, const HilbertFunction& h,
                                              std::span<const unsigned> ms);

/// Smallest m with m r integral.
unsigned refinement_stride(const Rational& r);

}  // namespace kstab
