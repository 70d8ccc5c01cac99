#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

namespace contra {

enum class Sign { plus, minus };

// plus ⊥ plus = minus ⊥ minus = plus
constexpr Sign compose(Sign a, Sign b) noexcept {
  return a == b ? Sign::plus : Sign::minus;
}
constexpr Sign opposite(Sign s) noexcept {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}
constexpr int sign_value(Sign s) noexcept { return s == Sign::plus ? 1 : -1; }

std::string_view to_string(Sign s) noexcept;
Sign parse_sign(std::string_view text);

// Largest supported ambient dimension for packed vectors.
inline constexpr unsigned kMaxDim = 64;
// Largest dimension for which routines enumerate all of V.
inline constexpr unsigned kMaxEnumerationDim = 32;

/// Element of F₂^dim packed little-endian into one 64-bit word.
/// Coordinates are laid out as hyperbolic pairs (x₁,y₁,…,x_d,y_d): x_i is
/// bit 2(i-1), y_i is bit 2(i-1)+1.
class BitVector {
 public:
  BitVector() = default;
  BitVector(std::uint64_t bits, unsigned dim);

  static BitVector zero(unsigned dim) { return BitVector(0, dim); }
  static BitVector unit(unsigned dim, unsigned coordinate);

  std::uint64_t bits() const noexcept { return bits_; }
  unsigned dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  bool operator[](unsigned coordinate) const;

  BitVector& operator+=(const BitVector& other);
  friend BitVector operator+(BitVector lhs, const BitVector& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::string to_string() const;  // coordinate 0 first

 private:
  std::uint64_t bits_ = 0;
  unsigned dim_ = 0;
};

constexpr std::uint64_t low_mask(unsigned bits) noexcept {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

inline bool parity(std::uint64_t x) noexcept { return __builtin_parityll(x); }

/// Non-degenerate quadratic space (V, θ) of dimension 2d over F₂.
///
/// θ is Σ x_i y_i plus, for each pair i flagged as a minus plane, the extra
/// term x_i + y_i (so that pair carries x² + xy + y²). The polarization is
/// always the standard symplectic form φ = Σ (x_i y'_i + y_i x'_i). The sign
/// of the space is the parity of the number of minus planes.
class QuadSpace {
 public:
  static QuadSpace standard(unsigned d, Sign sign);
  static QuadSpace direct_sum(const QuadSpace& u, const QuadSpace& w);

  unsigned half_dim() const noexcept { return d_; }
  unsigned dim() const noexcept { return 2 * d_; }
  Sign sign() const noexcept { return sign_; }
  std::uint64_t full_mask() const noexcept { return low_mask(2 * d_); }
  // Both coordinates of every minus plane.
  std::uint64_t minus_plane_mask() const noexcept { return minus_mask_; }
  std::uint64_t size() const;  // |V|; requires dim ≤ kMaxEnumerationDim

  // Unchecked evaluators on raw packed words.
  bool theta_raw(std::uint64_t v) const noexcept {
    return parity((v & (v >> 1) & kPairLow) ^ (v & minus_mask_));
  }
  static bool phi_raw(std::uint64_t u, std::uint64_t v) noexcept {
    return parity(u & swap_pairs(v));
  }
  // φ(u, v) = <u, swap_pairs(v)> for the standard dot product.
  static std::uint64_t swap_pairs(std::uint64_t v) noexcept {
    return ((v & kPairLow) << 1) | ((v >> 1) & kPairLow);
  }

  bool theta(const BitVector& v) const;
  bool phi(const BitVector& u, const BitVector& v) const;
  void check(const BitVector& v) const;  // throws on dimension mismatch

  friend bool operator==(const QuadSpace&, const QuadSpace&) = default;

 private:
  QuadSpace(unsigned d, std::uint64_t minus_mask);

  static constexpr std::uint64_t kPairLow = 0x5555555555555555ULL;

  unsigned d_ = 0;
  std::uint64_t minus_mask_ = 0;
  Sign sign_ = Sign::plus;
};

QuadSpace make_space(unsigned d, Sign sign);

bool eval_theta(const QuadSpace& s, const BitVector& v);
bool eval_phi(const QuadSpace& s, const BitVector& u, const BitVector& v);
// θ_a(v) = θ(v) + φ(v, a)
bool theta_shift(const QuadSpace& s, const BitVector& a, const BitVector& v);

struct WittCount {
  Sign sign;
  std::uint64_t singular_nonzero;
};

/// Classifies a quadratic form on F₂^dim by counting its nonzero singular
/// vectors. Throws std::domain_error when the count matches neither type.
WittCount witt_sign_by_count(const std::function<bool(const BitVector&)>& theta,
                             unsigned dim);

/// Orthogonal transvection x ↦ x + φ(x,v)·v at a nonsingular v.
class Transvection {
 public:
  Transvection(const QuadSpace& s, const BitVector& v);

  const BitVector& center() const noexcept { return center_; }
  BitVector operator()(const BitVector& x) const;
  std::uint64_t apply_raw(std::uint64_t x) const noexcept {
    return QuadSpace::phi_raw(x, center_.bits()) ? x ^ center_.bits() : x;
  }

 private:
  BitVector center_;
};

Transvection transvection(const QuadSpace& s, const BitVector& v);

/// V = U ⊥ W with U on the first 2a coordinates and W on the last 2b.
///
/// Each block carries the standard form of its sign, so `space` is the direct
/// sum of the two blocks. It has the parent's dimension and sign; its minus
/// planes may sit at different coordinates than in the parent.
struct OrthogonalDecomposition {
  QuadSpace space;
  QuadSpace u_block;
  QuadSpace w_block;
  unsigned a = 0;
  unsigned b = 0;

  Sign sign_u() const noexcept { return u_block.sign(); }
  Sign sign_w() const noexcept { return w_block.sign(); }
  std::uint64_t u_mask() const noexcept { return low_mask(2 * a); }
  std::uint64_t w_mask() const noexcept {
    return space.full_mask() & ~u_mask();
  }
  // z = x + y with x in U and y in W, returned in block-local coordinates.
  std::pair<std::uint64_t, std::uint64_t> split(std::uint64_t z) const noexcept {
    return {z & u_mask(), z >> (2 * a)};
  }
  std::uint64_t embed(std::uint64_t u_local, std::uint64_t w_local) const noexcept {
    return u_local | (w_local << (2 * a));
  }
};

/// Requires 2 ≤ a ≤ d−2. sign_w is forced by sign composition.
OrthogonalDecomposition decompose(const QuadSpace& s, unsigned a, Sign sign_u);
/// As above, but rejects a sign_w that does not compose to the parent sign.
OrthogonalDecomposition decompose(const QuadSpace& s, unsigned a, Sign sign_u,
                                  Sign sign_w);

}  // namespace contra
