#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contra/gf2_quadspace.hpp"

namespace contra {

// Zero is its own class: X⁰ excludes 0, but the pair counts need w = 0.
enum class VectorClass { singular, nonsingular, zero };

std::string_view to_string(VectorClass c) noexcept;

struct ClassCounts {
  std::uint64_t singular;     // |V⁰|, nonzero singular vectors
  std::uint64_t nonsingular;  // |V¹|
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct PerpCounts {
  std::uint64_t inside;   // |V¹ ∩ v^⊥|
  std::uint64_t outside;  // |V¹ \ v^⊥|
  friend bool operator==(const PerpCounts&, const PerpCounts&) = default;
};

// Closed forms. d ≤ 32.
ClassCounts count_singular_nonsingular(unsigned d, Sign sign);
/// Throws std::invalid_argument when the class is empty in the space
/// (nonzero singular vectors do not exist in the minus plane).
PerpCounts count_perp_classes(unsigned d, Sign sign, VectorClass v_class);

/// |U¹∩u^⊥|·|W¹∩w^⊥| + |U¹\u^⊥|·|W¹\w^⊥| for blocks of half-dimensions a, b.
/// Exactly one of u, w must be nonsingular.
std::uint64_t perp_pair_count(unsigned a, Sign sign_u, unsigned b, Sign sign_w,
                         VectorClass u_class, VectorClass w_class);

// ---- enumeration oracles ----

ClassCounts enumerate_class_counts(const QuadSpace& s);

/// Perp counts over every representative of a class.
struct PerpProfile {
  std::uint64_t representatives = 0;
  PerpCounts min{~std::uint64_t{0}, ~std::uint64_t{0}};
  PerpCounts max{0, 0};
  bool uniform() const noexcept { return representatives > 0 && min == max; }
};

enum class OracleRoute { pairwise, transform };

/// pairwise: O(|V|²) direct scan. transform: Walsh–Hadamard, O(d·|V|).
PerpProfile enumerate_perp_profile(const QuadSpace& s, VectorClass v_class,
                                   OracleRoute route, unsigned threads = 0);

struct CountReport {
  // total.{singular,nonsingular}, then {nonsingular,singular}_v.{perp,not_perp}:
  // nonsingular vectors inside / outside v^⊥ for v of the given class
  std::string quantity;
  unsigned d = 0;
  Sign sign = Sign::plus;
  VectorClass vector_class = VectorClass::zero;
  std::uint64_t formula_value = 0;
  std::optional<std::uint64_t> enumerated_value;
  bool uniform = true;  // representative independence, when enumerated

  bool agrees() const noexcept {
    return !enumerated_value || (*enumerated_value == formula_value && uniform);
  }
};

inline constexpr unsigned kPairwiseOracleMaxD = 6;
inline constexpr unsigned kTransformOracleMaxD = 12;

/// Every closed-form count with its oracle. Pairwise route up to
/// kPairwiseOracleMaxD, transform route up to kTransformOracleMaxD, formula
/// only beyond that.
std::vector<CountReport> count_reports(unsigned d, Sign sign, unsigned threads = 0);

}  // namespace contra
