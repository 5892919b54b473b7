#include "kstab/nef_decomposition.hpp"

#include <stdexcept>
#include <string>

namespace kstab {

std::string_view to_string(HorizontalDivisor d) {
  return d == HorizontalDivisor::ZeroSection ? "zero-section" : "infinity-section";
}

HorizontalDivisor parse_horizontal_divisor(std::string_view text) {
  if (text == "zero-section") return HorizontalDivisor::ZeroSection;
  if (text == "infinity-section") return HorizontalDivisor::InfinitySection;
  throw std::invalid_argument("unknown horizontal divisor '" + std::string(text) +
                              "' (expected zero-section or infinity-section)");
}

ClassPoly divisor_class(HorizontalDivisor d) {
  return d == HorizontalDivisor::ZeroSection ? basis::v0() : basis::vinf();
}

std::vector<Segment> decompose(const Construction& c, HorizontalDivisor d) {
  const DerivedClasses k = derived_classes(c);
  const Poly t = Poly::t();
  const Poly one(1);
  const Rational inv_r = Rational(1) / c.r();

  // Below t = 1 the divisor -K_Y - t D is nef.
  Segment nef_part{Rational(0), Rational(1), k.anti_k - t * divisor_class(d), ClassPoly{},
                   NegativeSupport::None, Poly()};

  Segment contracted{Rational(1), kPseffThreshold, {}, {}, NegativeSupport::None, t - one};
  if (d == HorizontalDivisor::InfinitySection) {
    // pullback along pi of a nef class on X; E is pi-exceptional
    contracted.positive = {Poly(2) - t, Poly(), (Poly(c.r() + Rational(1)) - t) * inv_r};
    contracted.support = NegativeSupport::E;
    contracted.negative = contracted.negative_weight * k.e;
  } else {
    // same, through the second contraction which collapses F
    const Poly a_coeff = (Poly(c.r()) - (t - one) * (c.l() - Rational(1))) * inv_r;
    contracted.positive = {Poly(), Poly(2) - t, a_coeff};
    contracted.support = NegativeSupport::F;
    contracted.negative = contracted.negative_weight * k.f;
  }
  return {nef_part, contracted};
}

std::vector<VolumePiece> volume_profile(const Construction& c, HorizontalDivisor d) {
  std::vector<VolumePiece> out;
  for (const Segment& s : decompose(c, d)) {
    out.push_back({s.t_lo, s.t_hi, top_power(c, s.positive)});
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    const Rational& t = out[i].t_lo;
    if (out[i - 1].volume.eval(t) != out[i].volume.eval(t)) {
      throw std::logic_error("volume profile discontinuous at t = " + t.str());
    }
  }
  if (!out.back().volume.eval(kPseffThreshold).is_zero()) {
    throw std::logic_error("volume profile does not vanish at the pseudo-effective threshold");
  }
  return out;
}

}  // namespace kstab
