#include <doctest.h>

#include <cmath>

#include "kstab/invariants.hpp"
#include "kstab/refinement.hpp"
#include "support/oracles.hpp"

using kstab::Construction;
using kstab::Integer;
using kstab::Rational;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

// dim H^0(P^2, O(k)) by counting monomials of degree k in three variables
Integer count_plane_monomials(unsigned long k) {
  Integer count = 0;
  for (unsigned long a = 0; a <= k; ++a) count += k - a + 1;
  return count;
}

}  // namespace

TEST_CASE("hilbert functions") {
  CHECK(kstab::hilbert_projective_space(2, 1)(3) == 10);
  CHECK(kstab::hilbert_projective_space(2, 2)(2) == 15);
  CHECK(kstab::hilbert_projective_space(3, 2)(1) == 10);
  const auto h = kstab::hilbert_projective_space(2, 1);
  CHECK(h(0) == 1);
  for (unsigned long k = 0; k < 30; ++k) {
    CHECK(h(k) == count_plane_monomials(k));
    CHECK(h(k) <= h(k + 1));
  }
  CHECK(*h.index == Rational(3));
  CHECK(*kstab::hilbert_projective_space(2, 2).index == q("3/2"));
  CHECK(kstab::hilbert_p1xp1()(3) == 16);
  CHECK_THROWS_AS(kstab::hilbert_projective_space(0, 1), std::invalid_argument);
}

TEST_CASE("basis profile of family 3.19") {
  const Construction c(3, q("3"), q("2"));
  const auto h = kstab::hilbert_projective_space(2, 1);

  const auto p1 = kstab::basis_profile(c, h, 1);
  REQUIRE(p1.rows.size() == 3);
  const long want_n1[] = {6, 10, 6};
  const long want_a1[] = {0, 0, 1};
  for (unsigned j = 0; j < 3; ++j) {
    CHECK(p1.rows[j].j == j);
    CHECK(p1.rows[j].n_mj == want_n1[j]);
    CHECK(p1.rows[j].a_mj == want_a1[j]);
  }
  CHECK(p1.total() == 22);

  const auto p2 = kstab::basis_profile(c, h, 2);
  const long want_n2[] = {15, 21, 28, 21, 15};
  const long want_a2[] = {0, 0, 0, 1, 2};
  REQUIRE(p2.rows.size() == 5);
  for (unsigned j = 0; j < 5; ++j) {
    CHECK(p2.rows[j].n_mj == want_n2[j]);
    CHECK(p2.rows[j].a_mj == want_a2[j]);
  }
  CHECK(p2.total() == 100);
}

TEST_CASE("movable degrees are symmetric in j") {
  const Construction c(3, q("3"), q("2"));
  const auto h = kstab::hilbert_projective_space(2, 1);
  for (unsigned m : {1U, 3U, 7U, 12U}) {
    const auto p = kstab::basis_profile(c, h, m);
    for (unsigned j = 0; j <= 2 * m; ++j) {
      CHECK(p.rows[j].n_mj == p.rows[2 * m - j].n_mj);
      CHECK(p.rows[j].a_mj == (j > m ? Integer(j - m) : Integer(0)));
    }
  }
}

TEST_CASE("a_m") {
  const Construction c(3, q("3"), q("2"));
  const auto h = kstab::hilbert_projective_space(2, 1);
  CHECK(kstab::a_m(c, h, 1) == q("3/11"));
  CHECK(kstab::a_m(c, h, 2) == q("51/200"));
  for (unsigned m = 1; m <= 20; ++m) {
    const Rational v = kstab::a_m(c, h, m);
    CHECK(v.sign() > 0);
    CHECK(v < Rational(1));
  }
  // family 4.2 over P^1 x P^1 and family 3.9 over (P^2, O(2)) with even m
  CHECK(kstab::a_m(Construction(3, q("2"), q("2")), kstab::hilbert_p1xp1(), 4).sign() > 0);
  CHECK(kstab::a_m(Construction(3, q("3/2"), q("2")), kstab::hilbert_projective_space(2, 2), 2)
            .sign() > 0);
}

TEST_CASE("refinement preconditions") {
  const auto h22 = kstab::hilbert_projective_space(2, 2);
  const Construction c39(3, q("3/2"), q("2"));
  try {
    (void)kstab::basis_profile(c39, h22, 3);
    FAIL("expected a stride error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("multiple of 2") != std::string::npos);
  }
  CHECK_NOTHROW(kstab::basis_profile(c39, h22, 2));
  CHECK(kstab::refinement_stride(q("3/2")) == 2);
  CHECK(kstab::refinement_stride(q("3")) == 1);

  // no O(d) on P^2 realizes r = 2
  CHECK_THROWS_AS(kstab::basis_profile(Construction(3, q("2"), q("2")),
                                       kstab::hilbert_projective_space(2, 3), 1),
                  std::invalid_argument);
  // base dimension must be n - 1
  CHECK_THROWS_AS(kstab::basis_profile(Construction(4, q("3"), q("2")),
                                       kstab::hilbert_projective_space(2, 1), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(kstab::basis_profile(Construction(3, q("3"), q("1")),
                                       kstab::hilbert_projective_space(2, 1), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(kstab::basis_profile(Construction(3, q("3"), q("2")),
                                       kstab::hilbert_projective_space(2, 1), 0),
                  std::invalid_argument);
}

TEST_CASE("convergence table") {
  const Construction c(3, q("3"), q("2"));
  const auto h = kstab::hilbert_projective_space(2, 1);
  const unsigned ms[] = {2, 1};
  const auto table = kstab::convergence_table(c, h, ms);
  REQUIRE(table.size() == 2);
  CHECK(table[0].m == 1);
  CHECK(table[0].error == q("3/11") - q("33/152"));
  CHECK(table[1].error == q("51/200") - q("33/152"));
  CHECK(table[1].error < table[0].error);
  CHECK(table[1].error.sign() > 0);

  const unsigned one[] = {5};
  CHECK(kstab::convergence_table(c, h, one).size() == 1);
}

TEST_CASE("N_m / m^n stabilizes") {
  const Construction c(3, q("3"), q("2"));
  const auto h = kstab::hilbert_projective_space(2, 1);
  auto ratio = [&](unsigned m) {
    const Integer total = kstab::basis_profile(c, h, m).total();
    return Rational(total, Integer(m) * m * m);
  };
  const Rational r32 = ratio(32);
  const Rational r64 = ratio(64);
  CHECK(abs(r64 / r32 - Rational(1)) < q("1/20"));
  // leading term: vol(L)/(n-1)! * (int_0^1 (r-1+u)^2 du + int_1^2 (r+1-u)^2 du) = 19/3
  CHECK(std::fabs(r64.to_double() - 19.0 / 3.0) / (19.0 / 3.0) < 0.05);
}
