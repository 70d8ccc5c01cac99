#include "contra/gf2_quadspace.hpp"

#include <stdexcept>

namespace contra {

std::string_view to_string(Sign s) noexcept {
  return s == Sign::plus ? "plus" : "minus";
}

Sign parse_sign(std::string_view text) {
  if (text == "plus" || text == "+") return Sign::plus;
  if (text == "minus" || text == "-") return Sign::minus;
  throw std::invalid_argument("unknown sign '" + std::string(text) + "'");
}

BitVector::BitVector(std::uint64_t bits, unsigned dim) : bits_(bits), dim_(dim) {
  if (dim > kMaxDim)
    throw std::invalid_argument("BitVector dimension exceeds 64");
  if ((bits & ~low_mask(dim)) != 0)
    throw std::invalid_argument("BitVector has coordinates beyond its dimension");
}

BitVector BitVector::unit(unsigned dim, unsigned coordinate) {
  if (coordinate >= dim) throw std::out_of_range("coordinate out of range");
  return BitVector(std::uint64_t{1} << coordinate, dim);
}

bool BitVector::operator[](unsigned coordinate) const {
  if (coordinate >= dim_) throw std::out_of_range("coordinate out of range");
  return (bits_ >> coordinate) & 1U;
}

BitVector& BitVector::operator+=(const BitVector& other) {
  if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch");
  bits_ ^= other.bits_;
  return *this;
}

std::string BitVector::to_string() const {
  std::string out(dim_, '0');
  for (unsigned i = 0; i < dim_; ++i)
    if ((bits_ >> i) & 1U) out[i] = '1';
  return out;
}

QuadSpace::QuadSpace(unsigned d, std::uint64_t minus_mask)
    : d_(d), minus_mask_(minus_mask) {
  unsigned planes = __builtin_popcountll(minus_mask) / 2;
  sign_ = planes % 2 == 0 ? Sign::plus : Sign::minus;
}

QuadSpace QuadSpace::standard(unsigned d, Sign sign) {
  if (d == 0) throw std::invalid_argument("quadratic space needs d >= 1");
  if (2 * d > kMaxDim) throw std::invalid_argument("dimension 2d exceeds 64");
  std::uint64_t minus = sign == Sign::minus ? std::uint64_t{3} << (2 * (d - 1)) : 0;
  return QuadSpace(d, minus);
}

QuadSpace QuadSpace::direct_sum(const QuadSpace& u, const QuadSpace& w) {
  unsigned d = u.d_ + w.d_;
  if (2 * d > kMaxDim) throw std::invalid_argument("dimension 2d exceeds 64");
  return QuadSpace(d, u.minus_mask_ | (w.minus_mask_ << (2 * u.d_)));
}

std::uint64_t QuadSpace::size() const {
  if (dim() > kMaxEnumerationDim)
    throw std::invalid_argument("space too large to enumerate");
  return std::uint64_t{1} << dim();
}

void QuadSpace::check(const BitVector& v) const {
  if (v.dim() != dim()) throw std::invalid_argument("dimension mismatch");
}

bool QuadSpace::theta(const BitVector& v) const {
  check(v);
  return theta_raw(v.bits());
}

bool QuadSpace::phi(const BitVector& u, const BitVector& v) const {
  check(u);
  check(v);
  return phi_raw(u.bits(), v.bits());
}

QuadSpace make_space(unsigned d, Sign sign) { return QuadSpace::standard(d, sign); }

bool eval_theta(const QuadSpace& s, const BitVector& v) { return s.theta(v); }

bool eval_phi(const QuadSpace& s, const BitVector& u, const BitVector& v) {
  return s.phi(u, v);
}

bool theta_shift(const QuadSpace& s, const BitVector& a, const BitVector& v) {
  return s.theta(v) ^ s.phi(v, a);
}

WittCount witt_sign_by_count(const std::function<bool(const BitVector&)>& theta,
                             unsigned dim) {
  if (dim == 0 || dim % 2 != 0)
    throw std::invalid_argument("dimension must be positive and even");
  if (dim > kMaxEnumerationDim)
    throw std::invalid_argument("dimension too large to enumerate");
  std::uint64_t count = 0;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << dim); ++v)
    if (!theta(BitVector(v, dim))) ++count;
  unsigned d = dim / 2;
  std::uint64_t half = std::uint64_t{1} << (dim - 1);
  std::uint64_t offset = std::uint64_t{1} << (d - 1);
  if (count == half + offset - 1) return {Sign::plus, count};
  if (count == half - offset - 1) return {Sign::minus, count};
  throw std::domain_error("form is degenerate or not quadratic");
}

Transvection::Transvection(const QuadSpace& s, const BitVector& v) : center_(v) {
  s.check(v);
  if (!s.theta_raw(v.bits()))
    throw std::invalid_argument("transvection center must be nonsingular");
}

BitVector Transvection::operator()(const BitVector& x) const {
  if (x.dim() != center_.dim()) throw std::invalid_argument("dimension mismatch");
  return BitVector(apply_raw(x.bits()), x.dim());
}

Transvection transvection(const QuadSpace& s, const BitVector& v) {
  return Transvection(s, v);
}

OrthogonalDecomposition decompose(const QuadSpace& s, unsigned a, Sign sign_u) {
  unsigned d = s.half_dim();
  if (a < 2 || d < 4 || a > d - 2)
    throw std::invalid_argument("decomposition needs 2 <= a <= d-2");
  Sign sign_w = compose(s.sign(), sign_u);
  QuadSpace u = make_space(a, sign_u);
  QuadSpace w = make_space(d - a, sign_w);
  return OrthogonalDecomposition{QuadSpace::direct_sum(u, w), u, w, a, d - a};
}

OrthogonalDecomposition decompose(const QuadSpace& s, unsigned a, Sign sign_u,
                                  Sign sign_w) {
  if (compose(sign_u, sign_w) != s.sign())
    throw std::invalid_argument("block signs do not compose to the parent sign");
  return decompose(s, a, sign_u);
}

}  // namespace contra
