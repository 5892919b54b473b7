#include "kstab/refinement.hpp"

#include <algorithm>
#include <stdexcept>

#include "kstab/invariants.hpp"

namespace kstab {

HilbertFunction hilbert_projective_space(unsigned s, unsigned d) {
  if (s == 0 || d == 0) throw std::invalid_argument("projective space base needs s, d >= 1");
  return {[s, d](unsigned long k) { return binom(k * d + s, s); },
          "P^" + std::to_string(s) + " with O(" + std::to_string(d) + ")", s,
          Rational(Integer(s + 1), Integer(d))};
}

HilbertFunction hilbert_p1xp1() {
  return {[](unsigned long k) {
            Integer v(k + 1);
            return Integer(v * v);
          },
          "P^1 x P^1 with O(1,1)", 2U, Rational(2)};
}

Integer BasisProfile::total() const {
  Integer sum = 0;
  for (const auto& row : rows) sum += row.n_mj;
  return sum;
}

unsigned refinement_stride(const Rational& r) {
  const Integer den = r.denominator();
  if (!den.fits_uint_p()) throw std::invalid_argument("index denominator too large");
  return static_cast<unsigned>(den.get_ui());
}

BasisProfile basis_profile(const Construction& c, const HilbertFunction& h, unsigned m) {
  if (c.l() != Rational(2)) {
    throw std::invalid_argument("refinement is defined only for l = 2, got l = " + c.l().str());
  }
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (h.dimension && *h.dimension + 1 != c.n()) {
    throw std::invalid_argument(h.description + " has dimension " +
                                std::to_string(*h.dimension) + ", but n = " +
                                std::to_string(c.n()) + " needs a base of dimension " +
                                std::to_string(c.n() - 1));
  }
  if (h.index && *h.index != c.r()) {
    throw std::invalid_argument(h.description + " has index " + h.index->str() +
                                ", which does not realize r = " + c.r().str());
  }
  const Rational mr = Rational(static_cast<long>(m)) * c.r();
  if (!mr.is_integer()) {
    throw std::invalid_argument("m r = " + mr.str() + " is not an integer; m must be a multiple of " +
                                std::to_string(refinement_stride(c.r())));
  }
  const unsigned long degree_top = mr.numerator().get_ui();

  BasisProfile out{m, {}};
  out.rows.reserve(2 * m + 1);
  for (unsigned j = 0; j <= 2 * m; ++j) {
    const unsigned long drop = j <= m ? m - j : j - m;
    const Integer fixed = j > m ? Integer(j - m) : Integer(0);
    out.rows.push_back({j, h(degree_top - drop), fixed});
  }
  return out;
}

Rational a_m(const Construction& c, const HilbertFunction& h, unsigned m) {
  const BasisProfile profile = basis_profile(c, h, m);
  Integer weighted = 0;
  for (const auto& row : profile.rows) weighted += row.n_mj * row.a_mj;
  return Rational(weighted, Integer(m) * profile.total());
}

std::vector<ConvergenceRow> convergence_table(const Construction& c, const HilbertFunction& h,
                                              std::span<const unsigned> ms) {
  std::vector<unsigned> sorted(ms.begin(), ms.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const Rational limit = coefficient_a(c.n(), c.r());
  std::vector<ConvergenceRow> out;
  out.reserve(sorted.size());
  for (unsigned m : sorted) {
    Rational value = a_m(c, h, m);
    Rational err = abs(value - limit);
    out.push_back({m, std::move(value), std::move(err)});
  }
  return out;
}

}  // namespace kstab
