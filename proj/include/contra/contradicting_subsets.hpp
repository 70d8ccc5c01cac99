#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "contra/gf2_quadspace.hpp"

namespace contra {

// Verification materializes V as a bitmap, so 2d is bounded here.
inline constexpr unsigned kMaxPairD = 12;

/// B = U¹ + W¹ and C = V⁰ ∩ c^⊥ for a decomposition V = U ⊥ W.
class ContradictingPair {
 public:
  const OrthogonalDecomposition& decomposition() const noexcept { return decomposition_; }
  const QuadSpace& space() const noexcept { return decomposition_.space; }
  unsigned d() const noexcept { return space().half_dim(); }
  BitVector c() const { return BitVector(c_, space().dim()); }
  std::uint64_t c_raw() const noexcept { return c_; }
  std::uint64_t modulus() const noexcept { return std::uint64_t{1} << (d() - 1); }

  // Sorted packed vectors.
  const std::vector<std::uint64_t>& b() const noexcept { return b_; }
  const std::vector<std::uint64_t>& c_set() const noexcept { return c_set_; }
  bool in_b(std::uint64_t v) const noexcept { return b_member_[v] != 0; }
  std::span<const std::uint8_t> b_indicator() const noexcept { return b_member_; }

  // False once B has been altered; only then the factored route is invalid.
  bool b_is_product() const noexcept { return b_is_product_; }

  /// Copy with the index-th element of B removed (negative control).
  ContradictingPair without_b_element(std::size_t index) const;

 private:
  friend ContradictingPair build_pair(const QuadSpace&, unsigned, Sign,
                                      std::optional<BitVector>);
  ContradictingPair(OrthogonalDecomposition decomposition, std::uint64_t c)
      : decomposition_(std::move(decomposition)), c_(c) {}

  OrthogonalDecomposition decomposition_;
  std::uint64_t c_ = 0;
  std::vector<std::uint64_t> b_;
  std::vector<std::uint8_t> b_member_;
  std::vector<std::uint64_t> c_set_;
  bool b_is_product_ = true;
};

/// First vector in coordinate order with θ(c) = 1.
BitVector default_c(const QuadSpace& s);

/// Requires 4 ≤ d ≤ kMaxPairD, 2 ≤ a ≤ d−2 and, when given, θ(c) = 1.
/// c is interpreted in the coordinates of the decomposition's space.
ContradictingPair build_pair(const QuadSpace& s, unsigned a, Sign sign_u,
                             std::optional<BitVector> c = std::nullopt);

enum class CountRoute { factored, transform, naive };
std::string_view to_string(CountRoute r) noexcept;

struct ZRouteEvidence {
  CountRoute route = CountRoute::factored;
  std::uint64_t z_checks = 0;
  std::uint64_t residue_min = 0;
  std::uint64_t residue_max = 0;
  std::uint64_t nonzero_residues = 0;
};

struct GroupSampleEvidence {
  std::uint64_t samples = 0;
  unsigned word_length = 0;
  std::uint64_t seed = 0;
  std::uint64_t residue_min = 0;
  std::uint64_t residue_max = 0;
  std::uint64_t nonzero_residues = 0;
  std::uint64_t reduction_mismatches = 0;  // |B∩C^g| ≠ |B∩(c^g)^⊥|
};

struct Certificate {
  unsigned d = 0;
  Sign sign = Sign::plus;
  unsigned a = 0;
  unsigned b = 0;
  Sign sign_u = Sign::plus;
  Sign sign_w = Sign::plus;
  BitVector c;
  bool b_is_product = true;
  std::uint64_t b_size = 0;
  std::uint64_t c_size = 0;
  std::uint64_t modulus = 0;
  std::optional<ZRouteEvidence> z_route;
  std::optional<GroupSampleEvidence> group_sample;

  bool modulus_divides_product() const noexcept {
    return (b_size * c_size) % modulus == 0;
  }
  /// Pass iff every recorded residue is 0, every sampled reduction holds,
  /// and the modulus does not divide |B|·|C|.
  bool passed() const noexcept;
  /// Union of the evidence sections; parameters must match.
  Certificate merged(const Certificate& other) const;
};

Certificate verify_z_divisibility(const ContradictingPair& pair,
                                  CountRoute route = CountRoute::factored,
                                  unsigned threads = 0);

Certificate verify_group_sample(const ContradictingPair& pair, std::uint64_t num_samples,
                                unsigned word_length, std::uint64_t seed);

/// Per-block tables for |U¹∩x^⊥|, |U¹\x^⊥| (and the same for W), so that
/// |B∩z^⊥| = |U¹∩x^⊥|·|W¹∩y^⊥| + |U¹\x^⊥|·|W¹\y^⊥| for z = x + y.
class FactoredCounter {
 public:
  explicit FactoredCounter(const OrthogonalDecomposition& decomposition);

  /// Checked entry point: z must be nonsingular.
  std::uint64_t count(const BitVector& z) const;
  std::uint64_t count_raw(std::uint64_t z) const noexcept {
    auto [x, y] = decomposition_.split(z);
    std::uint64_t u_in = u_inside_[x], w_in = w_inside_[y];
    return u_in * w_in + (u_total_ - u_in) * (w_total_ - w_in);
  }

 private:
  OrthogonalDecomposition decomposition_;
  std::vector<std::uint64_t> u_inside_;
  std::vector<std::uint64_t> w_inside_;
  std::uint64_t u_total_ = 0;
  std::uint64_t w_total_ = 0;
};

std::uint64_t factored_intersection_count(const OrthogonalDecomposition& decomposition,
                                          const BitVector& z);

/// |B ∩ z^⊥| by scanning B.
std::uint64_t naive_intersection_count(const ContradictingPair& pair, std::uint64_t z);

/// A product of orthogonal transvections, applied left to right.
class TransvectionWord {
 public:
  TransvectionWord() = default;
  explicit TransvectionWord(std::vector<std::uint64_t> centers)
      : centers_(std::move(centers)) {}

  const std::vector<std::uint64_t>& centers() const noexcept { return centers_; }
  std::uint64_t apply(std::uint64_t x) const noexcept {
    for (std::uint64_t v : centers_)
      if (QuadSpace::phi_raw(x, v)) x ^= v;
    return x;
  }

 private:
  std::vector<std::uint64_t> centers_;
};

// ---- sharply transitive sets ----

using Permutation = std::vector<std::uint32_t>;

/// Permutations of {0..degree−1} as image arrays. Construction rejects
/// entries that are not bijections of the point set.
class PermutationSet {
 public:
  PermutationSet(std::uint32_t degree, std::vector<Permutation> elements);

  std::uint32_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  std::uint32_t degree_;
  std::vector<Permutation> elements_;
};

bool check_sharply_transitive(const PermutationSet& s);

/// Σ_{g∈S} |B ∩ C^g|. Rejects sets that are not sharply transitive.
std::uint64_t translate_intersection_sum(const PermutationSet& s,
                                         std::span<const std::uint32_t> b,
                                         std::span<const std::uint32_t> c);

}  // namespace contra
