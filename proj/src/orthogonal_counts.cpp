#include "contra/orthogonal_counts.hpp"

#include <algorithm>
#include <stdexcept>

#include "contra/parallel.hpp"
#include "contra/perp_transform.hpp"

namespace contra {
namespace {

void check_d(unsigned d) {
  if (d == 0 || d > 32) throw std::invalid_argument("count formulas need 1 <= d <= 32");
}

bool in_class(const QuadSpace& s, std::uint64_t v, VectorClass c) {
  switch (c) {
    case VectorClass::zero: return v == 0;
    case VectorClass::singular: return v != 0 && !s.theta_raw(v);
    case VectorClass::nonsingular: return s.theta_raw(v);
  }
  return false;
}

void merge(PerpProfile& into, const PerpProfile& part) {
  into.representatives += part.representatives;
  into.min.inside = std::min(into.min.inside, part.min.inside);
  into.min.outside = std::min(into.min.outside, part.min.outside);
  into.max.inside = std::max(into.max.inside, part.max.inside);
  into.max.outside = std::max(into.max.outside, part.max.outside);
}

void record(PerpProfile& p, PerpCounts c) {
  merge(p, PerpProfile{1, c, c});
}

}  // namespace

std::string_view to_string(VectorClass c) noexcept {
  switch (c) {
    case VectorClass::singular: return "singular";
    case VectorClass::nonsingular: return "nonsingular";
    case VectorClass::zero: return "zero";
  }
  return "?";
}

ClassCounts count_singular_nonsingular(unsigned d, Sign sign) {
  check_d(d);
  std::uint64_t half = std::uint64_t{1} << (2 * d - 1);
  std::uint64_t off = std::uint64_t{1} << (d - 1);
  if (sign == Sign::plus) return {half + off - 1, half - off};
  return {half - off - 1, half + off};
}

PerpCounts count_perp_classes(unsigned d, Sign sign, VectorClass v_class) {
  check_d(d);
  ClassCounts totals = count_singular_nonsingular(d, sign);
  if (v_class == VectorClass::zero) return {totals.nonsingular, 0};
  if (v_class == VectorClass::singular && totals.singular == 0)
    throw std::invalid_argument("space has no nonzero singular vectors");
  std::uint64_t quarter = std::uint64_t{1} << (2 * d - 2);
  std::uint64_t off = std::uint64_t{1} << (d - 1);
  // ∓_V: minus for plus spaces, plus for minus spaces
  std::uint64_t shifted = sign == Sign::plus ? quarter - off : quarter + off;
  if (v_class == VectorClass::nonsingular) return {quarter, shifted};
  return {shifted, quarter};
}

std::uint64_t perp_pair_count(unsigned a, Sign sign_u, unsigned b, Sign sign_w,
                         VectorClass u_class, VectorClass w_class) {
  if (a < 2 || b < 2) throw std::invalid_argument("perp_pair_count needs a, b >= 2");
  bool u_ns = u_class == VectorClass::nonsingular;
  bool w_ns = w_class == VectorClass::nonsingular;
  if (u_ns == w_ns)
    throw std::invalid_argument("exactly one of u, w must be nonsingular");
  PerpCounts u = count_perp_classes(a, sign_u, u_class);
  PerpCounts w = count_perp_classes(b, sign_w, w_class);
  return u.inside * w.inside + u.outside * w.outside;
}

ClassCounts enumerate_class_counts(const QuadSpace& s) {
  ClassCounts out{0, 0};
  for (std::uint64_t v = 1; v < s.size(); ++v) {
    if (s.theta_raw(v))
      ++out.nonsingular;
    else
      ++out.singular;
  }
  return out;
}

PerpProfile enumerate_perp_profile(const QuadSpace& s, VectorClass v_class,
                                   OracleRoute route, unsigned threads) {
  std::uint64_t n = s.size();
  PerpProfile profile;
  if (route == OracleRoute::transform) {
    if (s.dim() > 2 * kTransformOracleMaxD)
      throw std::invalid_argument("space too large for the transform oracle");
    std::vector<std::uint8_t> nonsingular(n);
    std::uint64_t total = 0;
    for (std::uint64_t x = 0; x < n; ++x) total += nonsingular[x] = s.theta_raw(x);
    auto inside = perp_intersection_counts(nonsingular);
    for (std::uint64_t v = 0; v < n; ++v)
      if (in_class(s, v, v_class)) record(profile, {inside[v], total - inside[v]});
    return profile;
  }

  std::vector<std::uint64_t> nonsingular;
  for (std::uint64_t x = 0; x < n; ++x)
    if (s.theta_raw(x)) nonsingular.push_back(x);
  std::vector<PerpProfile> parts(resolve_threads(threads));
  parallel_chunks(n, threads, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    PerpProfile local;
    for (std::uint64_t v = begin; v < end; ++v) {
      if (!in_class(s, v, v_class)) continue;
      PerpCounts c{0, 0};
      for (std::uint64_t x : nonsingular) {
        if (QuadSpace::phi_raw(x, v))
          ++c.outside;
        else
          ++c.inside;
      }
      record(local, c);
    }
    parts[worker] = local;
  });
  for (const auto& p : parts) merge(profile, p);
  return profile;
}

std::vector<CountReport> count_reports(unsigned d, Sign sign, unsigned threads) {
  QuadSpace s = make_space(d, sign);
  ClassCounts formula = count_singular_nonsingular(d, sign);
  std::optional<OracleRoute> route;
  if (d <= kPairwiseOracleMaxD)
    route = OracleRoute::pairwise;
  else if (d <= kTransformOracleMaxD)
    route = OracleRoute::transform;

  std::vector<CountReport> reports;
  auto add = [&](std::string quantity, VectorClass c, std::uint64_t value) {
    reports.push_back(CountReport{std::move(quantity), d, sign, c, value, std::nullopt, true});
  };
  add("total.singular", VectorClass::singular, formula.singular);
  add("total.nonsingular", VectorClass::nonsingular, formula.nonsingular);
  if (route) {
    ClassCounts seen = enumerate_class_counts(s);
    reports[0].enumerated_value = seen.singular;
    reports[1].enumerated_value = seen.nonsingular;
  }

  auto add_perp = [&](VectorClass c, const char* inside_name, const char* outside_name) {
    PerpCounts f = count_perp_classes(d, sign, c);
    add(inside_name, c, f.inside);
    add(outside_name, c, f.outside);
    if (!route) return;
    PerpProfile p = enumerate_perp_profile(s, c, *route, threads);
    auto& in = reports[reports.size() - 2];
    auto& out = reports[reports.size() - 1];
    in.enumerated_value = p.min.inside;
    out.enumerated_value = p.min.outside;
    in.uniform = out.uniform = p.uniform();
  };
  add_perp(VectorClass::nonsingular, "nonsingular_v.perp", "nonsingular_v.not_perp");
  if (formula.singular > 0)
    add_perp(VectorClass::singular, "singular_v.perp", "singular_v.not_perp");
  return reports;
}

}  // namespace contra
