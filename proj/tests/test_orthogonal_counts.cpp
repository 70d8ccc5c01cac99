#include <doctest.h>

#include <set>
#include <stdexcept>

#include "contra/orthogonal_counts.hpp"

using namespace contra;

namespace {

// Pairs (u', w') ∈ U¹ × W¹ with φ(u', u) + φ(w', w) = 0, by enumeration.
std::uint64_t pair_count(const QuadSpace& u_space, std::uint64_t u, const QuadSpace& w_space,
                         std::uint64_t w) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < u_space.size(); ++x) {
    if (!u_space.theta_raw(x)) continue;
    for (std::uint64_t y = 0; y < w_space.size(); ++y) {
      if (!w_space.theta_raw(y)) continue;
      if (QuadSpace::phi_raw(x, u) == QuadSpace::phi_raw(y, w)) ++count;
    }
  }
  return count;
}

std::uint64_t first_of(const QuadSpace& s, VectorClass c) {
  for (std::uint64_t v = 0; v < s.size(); ++v) {
    bool match = c == VectorClass::zero ? v == 0
                 : c == VectorClass::singular ? (v != 0 && !s.theta_raw(v))
                                              : s.theta_raw(v);
    if (match) return v;
  }
  throw std::logic_error("empty class");
}

}  // namespace

TEST_CASE("count_singular_nonsingular closed forms") {
  CHECK(count_singular_nonsingular(2, Sign::plus) == ClassCounts{9, 6});
  CHECK(count_singular_nonsingular(2, Sign::minus) == ClassCounts{5, 10});
  // enumerated over the 256 vectors of the standard plus space
  CHECK(enumerate_class_counts(make_space(4, Sign::plus)) == ClassCounts{135, 120});
  CHECK(count_singular_nonsingular(4, Sign::plus) == ClassCounts{135, 120});
  CHECK(count_singular_nonsingular(32, Sign::plus).singular ==
        (std::uint64_t{1} << 63) + (std::uint64_t{1} << 31) - 1);
  CHECK_THROWS_AS(count_singular_nonsingular(0, Sign::plus), std::invalid_argument);
}

TEST_CASE("count_perp_classes closed forms") {
  CHECK(count_perp_classes(2, Sign::plus, VectorClass::nonsingular) == PerpCounts{4, 2});
  CHECK(count_perp_classes(2, Sign::minus, VectorClass::nonsingular) == PerpCounts{4, 6});
  CHECK(count_perp_classes(3, Sign::plus, VectorClass::singular) == PerpCounts{12, 16});
  CHECK(count_perp_classes(2, Sign::plus, VectorClass::zero) == PerpCounts{6, 0});
  CHECK_THROWS_AS(count_perp_classes(1, Sign::minus, VectorClass::singular),
                  std::invalid_argument);

  PerpProfile p = enumerate_perp_profile(make_space(3, Sign::plus), VectorClass::singular,
                                         OracleRoute::pairwise);
  CHECK(p.uniform());
  CHECK(p.representatives == 35);
  CHECK(p.min == PerpCounts{12, 16});
}

TEST_CASE("oracle equality and complementarity for d <= 5") {
  for (unsigned d = 1; d <= 5; ++d)
    for (Sign sign : {Sign::plus, Sign::minus}) {
      QuadSpace s = make_space(d, sign);
      ClassCounts totals = count_singular_nonsingular(d, sign);
      REQUIRE(enumerate_class_counts(s) == totals);
      for (VectorClass c : {VectorClass::nonsingular, VectorClass::singular}) {
        if (c == VectorClass::singular && totals.singular == 0) continue;
        PerpCounts f = count_perp_classes(d, sign, c);
        CHECK(f.inside + f.outside == totals.nonsingular);
        for (OracleRoute route : {OracleRoute::pairwise, OracleRoute::transform}) {
          PerpProfile p = enumerate_perp_profile(s, c, route, 2);
          CHECK(p.uniform());
          CHECK(p.min == f);
        }
      }
    }
}

TEST_CASE("count_reports") {
  auto reports = count_reports(2, Sign::plus);
  REQUIRE(reports.size() == 6);
  CHECK(reports[0].formula_value == 9);
  CHECK(reports[1].formula_value == 6);
  for (const auto& r : reports) {
    CHECK(r.enumerated_value.has_value());
    CHECK(r.agrees());
  }
  // minus plane: no nonzero singular vectors, so no singular_v rows
  CHECK(count_reports(1, Sign::minus).size() == 4);
  // beyond the transform budget only formulas are reported
  auto big = count_reports(20, Sign::minus);
  CHECK_FALSE(big.front().enumerated_value.has_value());
  CHECK(big.front().agrees());
}

TEST_CASE("bijection witnesses between classes, d <= 4") {
  for (unsigned d = 1; d <= 4; ++d)
    for (Sign sign : {Sign::plus, Sign::minus}) {
      QuadSpace s = make_space(d, sign);
      for (std::uint64_t v = 1; v < s.size(); ++v) {
        std::set<std::uint64_t> image, expected;
        if (s.theta_raw(v)) {
          // V¹ ∩ v^⊥ → (V⁰ ∩ v^⊥) ∪ {0}
          for (std::uint64_t x = 0; x < s.size(); ++x) {
            if (QuadSpace::phi_raw(x, v)) continue;
            if (s.theta_raw(x)) image.insert(x ^ v);
            else expected.insert(x);
          }
        } else {
          // V¹ \ v^⊥ → V⁰ \ v^⊥
          for (std::uint64_t x = 0; x < s.size(); ++x) {
            if (!QuadSpace::phi_raw(x, v)) continue;
            if (s.theta_raw(x)) image.insert(x ^ v);
            else expected.insert(x);
          }
        }
        REQUIRE(image == expected);
      }
    }
}

TEST_CASE("perp_pair_count examples") {
  CHECK(perp_pair_count(2, Sign::minus, 2, Sign::minus, VectorClass::nonsingular,
                        VectorClass::singular) == 48);
  CHECK(perp_pair_count(2, Sign::plus, 2, Sign::plus, VectorClass::nonsingular,
                        VectorClass::zero) == 24);
  CHECK_THROWS_AS(perp_pair_count(2, Sign::plus, 2, Sign::plus, VectorClass::singular,
                                  VectorClass::singular),
                  std::invalid_argument);
  CHECK_THROWS_AS(perp_pair_count(2, Sign::plus, 2, Sign::plus, VectorClass::nonsingular,
                                  VectorClass::nonsingular),
                  std::invalid_argument);
  CHECK_THROWS_AS(perp_pair_count(1, Sign::plus, 3, Sign::plus, VectorClass::nonsingular,
                                  VectorClass::zero),
                  std::invalid_argument);
}

TEST_CASE("perp_pair_count matches pair enumeration and is divisible, 2 <= a, b <= 3") {
  const std::pair<VectorClass, VectorClass> legal[] = {
      {VectorClass::nonsingular, VectorClass::singular},
      {VectorClass::nonsingular, VectorClass::zero},
      {VectorClass::singular, VectorClass::nonsingular},
      {VectorClass::zero, VectorClass::nonsingular},
  };
  for (unsigned a = 2; a <= 3; ++a)
    for (unsigned b = 2; b <= 3; ++b)
      for (Sign su : {Sign::plus, Sign::minus})
        for (Sign sw : {Sign::plus, Sign::minus})
          for (auto [uc, wc] : legal) {
            std::uint64_t value = perp_pair_count(a, su, b, sw, uc, wc);
            QuadSpace us = make_space(a, su), ws = make_space(b, sw);
            CHECK(value == pair_count(us, first_of(us, uc), ws, first_of(ws, wc)));
            CHECK(value % (std::uint64_t{1} << (a + b - 1)) == 0);
          }
}
