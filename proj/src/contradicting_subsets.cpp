#include "contra/contradicting_subsets.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

#include "contra/parallel.hpp"
#include "contra/perp_transform.hpp"

namespace contra {
namespace {

struct ResidueTally {
  std::uint64_t checks = 0;
  std::uint64_t min = ~std::uint64_t{0};
  std::uint64_t max = 0;
  std::uint64_t nonzero = 0;

  void add(std::uint64_t residue) {
    ++checks;
    min = std::min(min, residue);
    max = std::max(max, residue);
    if (residue != 0) ++nonzero;
  }
  void merge(const ResidueTally& o) {
    checks += o.checks;
    min = std::min(min, o.min);
    max = std::max(max, o.max);
    nonzero += o.nonzero;
  }
  std::uint64_t min_or_zero() const { return checks == 0 ? 0 : min; }
};

// |X¹ ∩ x^⊥| for every x of a block, plus |X¹|.
std::pair<std::vector<std::uint64_t>, std::uint64_t> block_table(const QuadSpace& block) {
  std::vector<std::uint8_t> nonsingular(block.size());
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < nonsingular.size(); ++x)
    total += nonsingular[x] = block.theta_raw(x);
  return {perp_intersection_counts(nonsingular), total};
}

Certificate base_certificate(const ContradictingPair& pair) {
  const auto& dec = pair.decomposition();
  Certificate cert;
  cert.d = pair.d();
  cert.sign = pair.space().sign();
  cert.a = dec.a;
  cert.b = dec.b;
  cert.sign_u = dec.sign_u();
  cert.sign_w = dec.sign_w();
  cert.c = pair.c();
  cert.b_is_product = pair.b_is_product();
  cert.b_size = pair.b().size();
  cert.c_size = pair.c_set().size();
  cert.modulus = pair.modulus();
  return cert;
}

std::uint64_t random_nonsingular(const QuadSpace& s, std::mt19937_64& rng) {
  for (;;) {
    std::uint64_t v = rng() & s.full_mask();
    if (s.theta_raw(v)) return v;
  }
}

}  // namespace

std::string_view to_string(CountRoute r) noexcept {
  switch (r) {
    case CountRoute::factored: return "factored";
    case CountRoute::transform: return "transform";
    case CountRoute::naive: return "naive";
  }
  return "?";
}

BitVector default_c(const QuadSpace& s) {
  for (std::uint64_t v = 1; v <= s.full_mask(); ++v)
    if (s.theta_raw(v)) return BitVector(v, s.dim());
  throw std::logic_error("space has no nonsingular vector");
}

ContradictingPair build_pair(const QuadSpace& s, unsigned a, Sign sign_u,
                             std::optional<BitVector> c) {
  if (s.half_dim() < 4) throw std::invalid_argument("contradicting pair needs d >= 4");
  if (s.half_dim() > kMaxPairD)
    throw std::invalid_argument("contradicting pair limited to d <= 12");
  OrthogonalDecomposition dec = decompose(s, a, sign_u);
  const QuadSpace& v = dec.space;
  BitVector chosen = c ? *c : default_c(v);
  if (!v.theta(chosen)) throw std::invalid_argument("c must be nonsingular");

  ContradictingPair pair(dec, chosen.bits());
  std::uint64_t n = v.size();
  pair.b_member_.assign(n, 0);
  // w outer, u inner keeps B sorted
  for (std::uint64_t w = 0; w < dec.w_block.size(); ++w) {
    if (!dec.w_block.theta_raw(w)) continue;
    for (std::uint64_t u = 0; u < dec.u_block.size(); ++u) {
      if (!dec.u_block.theta_raw(u)) continue;
      std::uint64_t x = dec.embed(u, w);
      pair.b_.push_back(x);
      pair.b_member_[x] = 1;
    }
  }
  for (std::uint64_t x = 1; x < n; ++x)
    if (!v.theta_raw(x) && !QuadSpace::phi_raw(x, pair.c_)) pair.c_set_.push_back(x);
  return pair;
}

ContradictingPair ContradictingPair::without_b_element(std::size_t index) const {
  if (index >= b_.size()) throw std::out_of_range("B index out of range");
  ContradictingPair copy = *this;
  copy.b_member_[copy.b_[index]] = 0;
  copy.b_.erase(copy.b_.begin() + static_cast<std::ptrdiff_t>(index));
  copy.b_is_product_ = false;
  return copy;
}

bool Certificate::passed() const noexcept {
  if (!z_route && !group_sample) return false;
  if (modulus_divides_product()) return false;
  if (z_route && z_route->nonzero_residues != 0) return false;
  if (group_sample &&
      (group_sample->nonzero_residues != 0 || group_sample->reduction_mismatches != 0))
    return false;
  return true;
}

Certificate Certificate::merged(const Certificate& other) const {
  if (d != other.d || sign != other.sign || a != other.a || sign_u != other.sign_u ||
      c != other.c || b_size != other.b_size || c_size != other.c_size)
    throw std::invalid_argument("certificates describe different pairs");
  Certificate out = *this;
  if (other.z_route) out.z_route = other.z_route;
  if (other.group_sample) out.group_sample = other.group_sample;
  return out;
}

FactoredCounter::FactoredCounter(const OrthogonalDecomposition& decomposition)
    : decomposition_(decomposition) {
  std::tie(u_inside_, u_total_) = block_table(decomposition.u_block);
  std::tie(w_inside_, w_total_) = block_table(decomposition.w_block);
}

std::uint64_t FactoredCounter::count(const BitVector& z) const {
  if (!decomposition_.space.theta(z))
    throw std::invalid_argument("z must be nonsingular");
  return count_raw(z.bits());
}

std::uint64_t factored_intersection_count(const OrthogonalDecomposition& decomposition,
                                          const BitVector& z) {
  return FactoredCounter(decomposition).count(z);
}

std::uint64_t naive_intersection_count(const ContradictingPair& pair, std::uint64_t z) {
  std::uint64_t count = 0;
  for (std::uint64_t v : pair.b())
    if (!QuadSpace::phi_raw(v, z)) ++count;
  return count;
}

Certificate verify_z_divisibility(const ContradictingPair& pair, CountRoute route,
                                  unsigned threads) {
  if (route == CountRoute::factored && !pair.b_is_product()) route = CountRoute::transform;
  const QuadSpace& s = pair.space();
  std::uint64_t n = s.size();
  std::uint64_t modulus = pair.modulus();

  std::optional<FactoredCounter> factored;
  std::vector<std::uint64_t> transformed;
  if (route == CountRoute::factored) factored.emplace(pair.decomposition());
  if (route == CountRoute::transform) transformed = perp_intersection_counts(pair.b_indicator());

  std::vector<ResidueTally> parts(resolve_threads(threads));
  parallel_chunks(n, threads, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    ResidueTally local;
    for (std::uint64_t z = begin; z < end; ++z) {
      if (!s.theta_raw(z)) continue;
      std::uint64_t count = 0;
      switch (route) {
        case CountRoute::factored: count = factored->count_raw(z); break;
        case CountRoute::transform: count = transformed[z]; break;
        case CountRoute::naive: count = naive_intersection_count(pair, z); break;
      }
      local.add(count % modulus);
    }
    parts[worker] = local;
  });
  ResidueTally total;
  for (const auto& p : parts) total.merge(p);

  Certificate cert = base_certificate(pair);
  cert.z_route = ZRouteEvidence{route, total.checks, total.min_or_zero(), total.max,
                                total.nonzero};
  return cert;
}

Certificate verify_group_sample(const ContradictingPair& pair, std::uint64_t num_samples,
                                unsigned word_length, std::uint64_t seed) {
  const QuadSpace& s = pair.space();
  std::mt19937_64 rng(seed);
  std::uint64_t modulus = pair.modulus();
  ResidueTally tally;
  std::uint64_t mismatches = 0;
  for (std::uint64_t sample = 0; sample < num_samples; ++sample) {
    std::vector<std::uint64_t> centers(word_length);
    for (auto& v : centers) v = random_nonsingular(s, rng);
    TransvectionWord g(std::move(centers));

    std::uint64_t direct = 0;
    for (std::uint64_t v : pair.c_set())
      if (pair.in_b(g.apply(v))) ++direct;
    std::uint64_t reduced = naive_intersection_count(pair, g.apply(pair.c_raw()));
    if (direct != reduced) ++mismatches;
    tally.add(direct % modulus);
  }
  Certificate cert = base_certificate(pair);
  cert.group_sample = GroupSampleEvidence{tally.checks, word_length, seed, tally.min_or_zero(),
                                          tally.max, tally.nonzero, mismatches};
  return cert;
}

PermutationSet::PermutationSet(std::uint32_t degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
  std::vector<std::uint8_t> seen(degree);
  for (const auto& g : elements_) {
    if (g.size() != degree) throw std::invalid_argument("permutation has wrong degree");
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t image : g) {
      if (image >= degree || seen[image])
        throw std::invalid_argument("malformed permutation: not a bijection");
      seen[image] = 1;
    }
  }
}

bool check_sharply_transitive(const PermutationSet& s) {
  std::uint32_t n = s.degree();
  if (s.size() != n) return false;
  std::vector<std::uint8_t> hit(n);
  for (std::uint32_t alpha = 0; alpha < n; ++alpha) {
    std::fill(hit.begin(), hit.end(), 0);
    for (const auto& g : s.elements()) {
      if (hit[g[alpha]]) return false;
      hit[g[alpha]] = 1;
    }
  }
  return true;
}

std::uint64_t translate_intersection_sum(const PermutationSet& s,
                                         std::span<const std::uint32_t> b,
                                         std::span<const std::uint32_t> c) {
  if (!check_sharply_transitive(s))
    throw std::invalid_argument("permutation set is not sharply transitive");
  std::uint32_t n = s.degree();
  std::vector<std::uint8_t> in_b(n), in_c(n);
  for (auto x : b) {
    if (x >= n) throw std::out_of_range("point out of range");
    in_b[x] = 1;
  }
  for (auto x : c) {
    if (x >= n) throw std::out_of_range("point out of range");
    in_c[x] = 1;
  }
  std::uint64_t sum = 0;
  for (const auto& g : s.elements())
    for (std::uint32_t x = 0; x < n; ++x)
      if (in_c[x] && in_b[g[x]]) ++sum;
  return sum;
}

}  // namespace contra
