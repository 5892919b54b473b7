#pragma once

#include <vector>

#include "kstab/geometry.hpp"

namespace kstab::test {

inline std::vector<Rational> grid_indices() {
  return {Rational::parse("5/4"), Rational::parse("3/2"), Rational(2), Rational(3)};
}

inline std::vector<Rational> grid_ls() {
  return {Rational(0),           Rational::parse("1/2"), Rational(1), Rational::parse("3/2"),
          Rational(2),           Rational::parse("5/2"), Rational(3)};
}

/// (n, r, l) in {2..6} x {5/4, 3/2, 2, 3} x {0, 1/2, 1, 3/2, 2, 5/2, 3}, l < r + 1.
inline std::vector<Construction> grid(const Rational& vol_v = Rational(1)) {
  std::vector<Construction> out;
  for (unsigned n = 2; n <= 6; ++n) {
    for (const Rational& r : grid_indices()) {
      for (const Rational& l : grid_ls()) {
        if (l < r + Rational(1)) out.emplace_back(n, r, l, vol_v);
      }
    }
  }
  return out;
}

}  // namespace kstab::test
