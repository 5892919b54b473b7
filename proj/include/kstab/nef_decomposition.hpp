#pragma once

#include <string_view>
#include <vector>

#include "kstab/geometry.hpp"

namespace kstab {

/// The two torus-fixed horizontal prime divisors of Y.
enum class HorizontalDivisor { ZeroSection, InfinitySection };

std::string_view to_string(HorizontalDivisor d);
/// Accepts "zero-section" / "infinity-section".
HorizontalDivisor parse_horizontal_divisor(std::string_view text);

/// The class of the divisor as a basis vector.
ClassPoly divisor_class(HorizontalDivisor d);

/// Which contracted divisor carries the negative part of a segment.
enum class NegativeSupport { None, E, F };

/// One piece of the Zariski decomposition of -K_Y - t D on [t_lo, t_hi].
/// negative == negative_weight(t) * (E or F, per support).
struct Segment {
  Rational t_lo;
  Rational t_hi;
  ClassPoly positive;
  ClassPoly negative;
  NegativeSupport support = NegativeSupport::None;
  Poly negative_weight;
};

/// Pseudo-effective threshold of both horizontal divisors.
inline const Rational kPseffThreshold{2};

/// Segments [0, 1] and [1, 2] of the decomposition. On [1, 2] the negative
/// part is (t - 1) E for Vbar_inf and (t - 1) F for V_0.
std::vector<Segment> decompose(const Construction& c, HorizontalDivisor d);

struct VolumePiece {
  Rational t_lo;
  Rational t_hi;
  Poly volume;  // vol(-K_Y - t D) = positive(t)^n on [t_lo, t_hi]
};

/// Piecewise polynomial vol(-K_Y - t D) on [0, 2]. Throws std::logic_error if
/// the profile is discontinuous at a breakpoint or nonzero at the threshold.
std::vector<VolumePiece> volume_profile(const Construction& c, HorizontalDivisor d);

}  // namespace kstab
