#include "contra/perp_transform.hpp"

#include <stdexcept>

#include "contra/gf2_quadspace.hpp"

namespace contra {

void walsh_hadamard(std::span<std::int64_t> values) {
  std::size_t n = values.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("transform length must be a power of two");
  for (std::size_t half = 1; half < n; half <<= 1)
    for (std::size_t block = 0; block < n; block += 2 * half)
      for (std::size_t k = block; k < block + half; ++k) {
        std::int64_t a = values[k];
        std::int64_t b = values[k + half];
        values[k] = a + b;
        values[k + half] = a - b;
      }
}

std::vector<std::uint64_t> perp_intersection_counts(std::span<const std::uint8_t> indicator) {
  std::size_t n = indicator.size();
  // dimension must be even: n = 4^d
  if (n == 0 || (n & (n - 1)) != 0 || (__builtin_ctzll(n) % 2) != 0)
    throw std::invalid_argument("indicator length must be 4^d");
  std::vector<std::int64_t> spectrum(indicator.begin(), indicator.end());
  std::int64_t total = 0;
  for (auto v : indicator) total += v;
  walsh_hadamard(spectrum);
  std::vector<std::uint64_t> counts(n);
  for (std::uint64_t x = 0; x < n; ++x)
    counts[x] = static_cast<std::uint64_t>((total + spectrum[QuadSpace::swap_pairs(x)]) / 2);
  return counts;
}

}  // namespace contra
