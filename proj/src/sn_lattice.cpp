#include "contra/sn_lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "contra/parallel.hpp"

namespace contra {
namespace {

unsigned valuation(unsigned x, unsigned p) {
  unsigned v = 0;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

mpz_class from_exponents(const std::vector<unsigned>& primes, const std::vector<int>& exps) {
  mpz_class out = 1, power;
  for (std::size_t q = 0; q < primes.size(); ++q) {
    if (exps[q] < 0) throw std::logic_error("negative prime exponent");
    mpz_ui_pow_ui(power.get_mpz_t(), primes[q], static_cast<unsigned long>(exps[q]));
    out *= power;
  }
  return out;
}

// v_p(k) and v_p(e!) tables for k, e ≤ limit, row-major [value][prime].
struct ValuationTables {
  unsigned limit;
  std::vector<unsigned> primes;
  std::vector<std::uint16_t> of_value;
  std::vector<std::uint16_t> of_factorial;

  explicit ValuationTables(unsigned limit_)
      : limit(limit_), primes(primes_up_to(limit_)) {
    std::size_t np = primes.size();
    of_value.assign((limit + 1) * np, 0);
    of_factorial.assign((limit + 1) * np, 0);
    for (unsigned x = 1; x <= limit; ++x)
      for (std::size_t q = 0; q < np; ++q) {
        of_value[x * np + q] = static_cast<std::uint16_t>(valuation(x, primes[q]));
        of_factorial[x * np + q] =
            static_cast<std::uint16_t>(of_factorial[(x - 1) * np + q] + of_value[x * np + q]);
      }
  }
  std::size_t width() const noexcept { return primes.size(); }
  // v_p(k^e · e!) into out
  void contribution(unsigned k, unsigned e, const std::uint16_t* base, std::uint16_t* out) const {
    std::size_t np = width();
    const std::uint16_t* vk = &of_value[k * np];
    const std::uint16_t* fe = &of_factorial[e * np];
    for (std::size_t q = 0; q < np; ++q)
      out[q] = static_cast<std::uint16_t>(base[q] + e * vk[q] + fe[q]);
  }
};

// Visits every partition of a sum ≤ limit into parts ≥ 3 once, recording
// per sum the componentwise max of v_p(∏ k^{e_k} e_k!).
struct ProfileWalker {
  const ValuationTables& tables;
  std::vector<std::uint16_t> best;
  std::vector<std::uint8_t> reachable;
  std::vector<std::uint16_t> stack;

  explicit ProfileWalker(const ValuationTables& t)
      : tables(t),
        best((t.limit + 1) * t.width(), 0),
        reachable(t.limit + 1, 0),
        stack((t.limit + 2) * t.width(), 0) {}

  void record(unsigned sum, const std::uint16_t* cur) {
    std::size_t np = tables.width();
    reachable[sum] = 1;
    std::uint16_t* b = &best[sum * np];
    for (std::size_t q = 0; q < np; ++q) b[q] = std::max(b[q], cur[q]);
  }

  void descend(unsigned sum, unsigned k, unsigned depth) {
    std::size_t np = tables.width();
    const std::uint16_t* cur = &stack[depth * np];
    std::uint16_t* next = &stack[(depth + 1) * np];
    for (unsigned e = 1; sum + k * e <= tables.limit; ++e) {
      tables.contribution(k, e, cur, next);
      visit(sum + k * e, k - 1, depth + 1);
    }
  }

  void visit(unsigned sum, unsigned max_part, unsigned depth) {
    record(sum, &stack[depth * tables.width()]);
    unsigned top = std::min(max_part, tables.limit - sum);
    for (unsigned k = top; k >= 3; --k) descend(sum, k, depth);
  }
};

// Partitions of exactly `target` into parts ≥ 3, tracking the running max of
// v_p(∏ k^{e_k} e_k!) and stopping once every prime reaches its cap.
struct GammaWalker {
  const ValuationTables& tables;
  unsigned target;
  std::vector<int> cap;
  std::vector<int> best;
  std::vector<std::uint16_t> stack;
  std::size_t open = 0;
  bool any = false;

  GammaWalker(const ValuationTables& t, unsigned target_, std::vector<int> cap_)
      : tables(t), target(target_), cap(std::move(cap_)),
        best(t.width(), -1), stack((target_ + 2) * t.width(), 0) {
    open = t.width();
  }

  bool done() const noexcept { return any && open == 0; }

  void leaf(const std::uint16_t* cur) {
    std::size_t np = tables.width();
    if (!any) {
      any = true;
      open = 0;
      for (std::size_t q = 0; q < np; ++q) {
        best[q] = cur[q];
        if (best[q] < cap[q]) ++open;
      }
      return;
    }
    for (std::size_t q = 0; q < np; ++q) {
      if (cur[q] > best[q]) {
        if (best[q] < cap[q] && cur[q] >= cap[q]) --open;
        best[q] = cur[q];
      }
    }
  }

  void visit(unsigned sum, unsigned max_part, unsigned depth) {
    std::size_t np = tables.width();
    const std::uint16_t* cur = &stack[depth * np];
    if (sum == target) {
      leaf(cur);
      return;
    }
    unsigned top = std::min(max_part, target - sum);
    for (unsigned k = top; k >= 3 && !done(); --k) {
      std::uint16_t* next = &stack[(depth + 1) * np];
      for (unsigned e = 1; sum + k * e <= target && !done(); ++e) {
        unsigned rest = target - sum - k * e;
        if (rest == 1 || rest == 2) continue;
        tables.contribution(k, e, cur, next);
        visit(sum + k * e, k - 1, depth + 1);
      }
    }
  }
};

void check_gamma_indices(unsigned n, unsigned i) {
  if (n == 0) throw std::invalid_argument("gamma needs n >= 1");
  if (i > 1) throw std::invalid_argument("gamma needs i in {0, 1}");
}

void enumerate_rest(unsigned remaining, unsigned max_part, PartitionType& p,
                    const std::function<void(const PartitionType&)>& visit) {
  if (remaining == 0) {
    visit(p);
    return;
  }
  for (unsigned k = std::min(max_part, remaining); k >= 3; --k) {
    for (unsigned e = 1; k * e <= remaining; ++e) {
      p.multiplicity[k - 1] = e;
      enumerate_rest(remaining - k * e, k - 1, p, visit);
    }
    p.multiplicity[k - 1] = 0;
  }
}

}  // namespace

std::vector<unsigned> PartitionType::parts() const {
  std::vector<unsigned> out;
  for (unsigned k = static_cast<unsigned>(multiplicity.size()); k >= 1; --k)
    out.insert(out.end(), multiplicity[k - 1], k);
  return out;
}

void enumerate_partition_types(unsigned n, unsigned i, unsigned j,
                               const std::function<void(const PartitionType&)>& visit) {
  if (n == 0) throw std::invalid_argument("partition types need n >= 1");
  if (i > 1) throw std::invalid_argument("partition types need i in {0, 1}");
  if (i + 2 * j > n) return;
  PartitionType p{n, std::vector<unsigned>(n, 0)};
  p.multiplicity[0] = i;
  if (j > 0) p.multiplicity[1] = j;
  enumerate_rest(n - i - 2 * j, n, p, visit);
}

mpz_class class_size(const PartitionType& p) {
  unsigned total = 0;
  for (unsigned k = 1; k <= p.multiplicity.size(); ++k) total += k * p.multiplicity[k - 1];
  if (total != p.n) throw std::invalid_argument("partition type does not sum to n");
  mpz_class size, factor;
  mpz_fac_ui(size.get_mpz_t(), p.n);
  for (unsigned k = 1; k <= p.multiplicity.size(); ++k) {
    unsigned e = p.multiplicity[k - 1];
    if (e == 0) continue;
    mpz_ui_pow_ui(factor.get_mpz_t(), k, e);
    size /= factor;
    mpz_fac_ui(factor.get_mpz_t(), e);
    size /= factor;
  }
  return size;
}

std::vector<unsigned> primes_up_to(unsigned n) {
  std::vector<unsigned> primes;
  std::vector<bool> composite(n + 1, false);
  for (unsigned x = 2; x <= n; ++x) {
    if (composite[x]) continue;
    primes.push_back(x);
    for (unsigned long long y = 1ULL * x * x; y <= n; y += x) composite[y] = true;
  }
  return primes;
}

unsigned legendre_exponent(unsigned n, unsigned p) {
  unsigned e = 0;
  for (unsigned long long q = p; q <= n; q *= p) e += static_cast<unsigned>(n / q);
  return e;
}

mpz_class gamma(unsigned n, unsigned i, unsigned j) {
  check_gamma_indices(n, i);
  if (i + 2 * j > n) return 0;
  unsigned rest = n - i - 2 * j;
  if (rest == 1 || rest == 2) return 0;

  ValuationTables tables(n);
  std::size_t np = tables.width();
  // class-size exponent when the parts ≥ 3 contribute nothing
  std::vector<int> cap(np);
  for (std::size_t q = 0; q < np; ++q) {
    unsigned p = tables.primes[q];
    cap[q] = static_cast<int>(legendre_exponent(n, p)) - (p == 2 ? static_cast<int>(j) : 0) -
             static_cast<int>(legendre_exponent(j, p));
  }
  GammaWalker walker(tables, rest, cap);
  walker.visit(0, rest, 0);
  if (!walker.any) return 0;
  std::vector<int> exps(np);
  for (std::size_t q = 0; q < np; ++q) exps[q] = cap[q] - walker.best[q];
  return from_exponents(tables.primes, exps);
}

GammaCache::GammaCache(unsigned n_max, unsigned threads) : n_max_(n_max) {
  if (n_max == 0) throw std::invalid_argument("gamma cache needs n_max >= 1");
  ValuationTables tables(n_max);
  primes_ = tables.primes;
  std::size_t np = tables.width();
  best_.assign((n_max + 1) * np, 0);
  reachable_.assign(n_max + 1, 0);
  reachable_[0] = 1;

  unsigned workers = std::min(resolve_threads(threads), std::max(1U, n_max));
  std::vector<ProfileWalker> walkers;
  walkers.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) walkers.emplace_back(tables);
  // largest part k goes to worker k mod workers
  parallel_chunks(workers, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t w = begin; w < end; ++w)
      for (unsigned k = n_max; k >= 3; --k)
        if (k % workers == w) walkers[w].descend(0, k, 0);
  });
  for (const auto& walker : walkers) {
    for (unsigned r = 0; r <= n_max; ++r) {
      if (!walker.reachable[r]) continue;
      reachable_[r] = 1;
      for (std::size_t q = 0; q < np; ++q)
        best_[r * np + q] = std::max(best_[r * np + q], walker.best[r * np + q]);
    }
  }
}

mpz_class GammaCache::value(unsigned n, unsigned i, unsigned j) const {
  check_gamma_indices(n, i);
  if (n > n_max_) throw std::out_of_range("n exceeds the gamma cache bound");
  if (i + 2 * j > n) return 0;
  unsigned rest = n - i - 2 * j;
  if (!reachable_[rest]) return 0;
  std::size_t np = primes_.size();
  std::vector<unsigned> primes;
  std::vector<int> exps;
  for (std::size_t q = 0; q < np && primes_[q] <= n; ++q) {
    unsigned p = primes_[q];
    primes.push_back(p);
    exps.push_back(static_cast<int>(legendre_exponent(n, p)) -
                   (p == 2 ? static_cast<int>(j) : 0) -
                   static_cast<int>(legendre_exponent(j, p)) -
                   static_cast<int>(best_[rest * np + q]));
  }
  return from_exponents(primes, exps);
}

GammaTable GammaCache::table(unsigned n) const {
  GammaTable t;
  t.n = n;
  t.m = n / 2;
  for (unsigned i = 0; i < 2; ++i) {
    t.values[i].reserve(t.m + 1);
    for (unsigned j = 0; j <= t.m; ++j) t.values[i].push_back(value(n, i, j));
  }
  return t;
}

GammaTable gamma_table(unsigned n) { return GammaCache(n).table(n); }

std::optional<std::vector<mpz_class>> solve_integer(const LinearSystem& system) {
  std::size_t rows = system.rows(), cols = system.cols();
  if (system.rhs.size() != rows) throw std::invalid_argument("rhs length mismatch");
  for (const auto& row : system.matrix)
    if (row.size() != cols) throw std::invalid_argument("ragged coefficient matrix");

  auto h = system.matrix;
  std::vector<std::vector<mpz_class>> u(cols, std::vector<mpz_class>(cols, 0));
  for (std::size_t k = 0; k < cols; ++k) u[k][k] = 1;

  // col_p ← s·col_p + t·col_k, col_k ← −b·col_p + a·col_k on H and U
  auto combine = [&](std::size_t p, std::size_t k, const mpz_class& s, const mpz_class& t,
                     const mpz_class& a, const mpz_class& b) {
    auto apply = [&](auto& matrix, std::size_t count) {
      for (std::size_t r = 0; r < count; ++r) {
        mpz_class xp = matrix[r][p], xk = matrix[r][k];
        matrix[r][p] = s * xp + t * xk;
        matrix[r][k] = a * xk - b * xp;
      }
    };
    apply(h, rows);
    apply(u, cols);
  };

  std::vector<std::optional<std::size_t>> pivot_of(rows);
  std::size_t pc = 0;
  mpz_class g, s, t;
  for (std::size_t r = 0; r < rows && pc < cols; ++r) {
    for (std::size_t k = pc + 1; k < cols; ++k) {
      if (h[r][k] == 0) continue;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h[r][pc].get_mpz_t(),
                 h[r][k].get_mpz_t());
      mpz_class a = h[r][pc] / g, b = h[r][k] / g;
      combine(pc, k, s, t, a, b);
    }
    if (h[r][pc] == 0) continue;
    if (h[r][pc] < 0) {
      for (std::size_t x = 0; x < rows; ++x) h[x][pc] = -h[x][pc];
      for (std::size_t x = 0; x < cols; ++x) u[x][pc] = -u[x][pc];
    }
    // reduce entries left of the pivot; column pc is zero in earlier rows
    for (std::size_t q = 0; q < pc; ++q) {
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), h[r][q].get_mpz_t(), h[r][pc].get_mpz_t());
      if (f == 0) continue;
      for (std::size_t x = 0; x < rows; ++x) h[x][q] -= f * h[x][pc];
      for (std::size_t x = 0; x < cols; ++x) u[x][q] -= f * u[x][pc];
    }
    pivot_of[r] = pc++;
  }

  std::vector<mpz_class> x(cols, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class acc = system.rhs[r];
    for (std::size_t q = 0; q < cols; ++q)
      if (x[q] != 0) acc -= h[r][q] * x[q];
    if (!pivot_of[r]) {
      if (acc != 0) return std::nullopt;
      continue;
    }
    const mpz_class& pivot = h[r][*pivot_of[r]];
    if (!mpz_divisible_p(acc.get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
    mpz_divexact(x[*pivot_of[r]].get_mpz_t(), acc.get_mpz_t(), pivot.get_mpz_t());
  }

  std::vector<mpz_class> y(cols, 0);
  for (std::size_t r = 0; r < cols; ++r)
    for (std::size_t q = 0; q < cols; ++q)
      if (x[q] != 0) y[r] += u[r][q] * x[q];

  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class lhs = 0;
    for (std::size_t q = 0; q < cols; ++q) lhs += system.matrix[r][q] * y[q];
    if (lhs != system.rhs[r]) throw std::logic_error("integer solver produced a wrong solution");
  }
  return y;
}

SnSystem build_system(unsigned n) {
  if (n < 4) throw std::invalid_argument("the S_n system needs n >= 4");
  return build_system(gamma_table(n));
}

SnSystem build_system(GammaTable gamma) {
  unsigned n = gamma.n;
  if (n < 4) throw std::invalid_argument("the S_n system needs n >= 4");
  SnSystem out{std::move(gamma), {}};
  unsigned m = out.m();
  std::size_t cols = 2 * (m + 1);
  auto& matrix = out.system.matrix;
  matrix.assign(3, std::vector<mpz_class>(cols, 0));
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j <= m; ++j) {
      const mpz_class& g = out.gamma.at(i, j);
      matrix[0][out.column(i, j)] = g * j;
      matrix[1 + i][out.column(i, j)] = g;
    }
  mpz_class nn = n;
  out.system.rhs = {nn * (nn - 1) / 2, nn - 1, nn * (nn - 2)};
  return out;
}

std::array<mpz_class, 3> sn_residuals(const GammaTable& gamma,
                                      const std::array<std::vector<mpz_class>, 2>& y) {
  mpz_class first = 0, second = 0, third = 0;
  for (unsigned j = 0; j <= gamma.m; ++j) {
    first += y[0].at(j) * j * gamma.at(0, j) + y[1].at(j) * j * gamma.at(1, j);
    second += y[0].at(j) * gamma.at(0, j);
    third += y[1].at(j) * gamma.at(1, j);
  }
  mpz_class n = gamma.n;
  return {first - n * (n - 1) / 2, second - (n - 1), third - n * (n - 2)};
}

std::optional<SolvabilityWitness> solve_sn_system(const SnSystem& system) {
  auto solution = solve_integer(system.system);
  if (!solution) return std::nullopt;
  SolvabilityWitness witness;
  witness.n = system.n();
  witness.m = system.m();
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j <= witness.m; ++j)
      witness.y[i].push_back((*solution)[system.column(i, j)]);
  witness.residuals = sn_residuals(system.gamma, witness.y);
  return witness;
}

Lattice2 hermite_lattice(std::vector<Vec2> generators) {
  Lattice2 lattice;
  std::size_t count = generators.size();
  lattice.generators = std::move(generators);
  lattice.pivot_coefficients.assign(count, 0);
  lattice.tail_coefficients.assign(count, 0);

  mpz_class g, s, t;
  auto fold_tail = [&](const mpz_class& value, const std::vector<mpz_class>& coef) {
    if (value == 0) return;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), lattice.tail.get_mpz_t(),
               value.get_mpz_t());
    lattice.tail = g;
    for (std::size_t k = 0; k < count; ++k)
      lattice.tail_coefficients[k] = s * lattice.tail_coefficients[k] + t * coef[k];
  };

  for (std::size_t k = 0; k < count; ++k) {
    const Vec2& gen = lattice.generators[k];
    std::vector<mpz_class> unit(count, 0);
    unit[k] = 1;
    if (gen[0] == 0) {
      fold_tail(gen[1], unit);
      continue;
    }
    Vec2& p = lattice.pivot;
    auto& pc = lattice.pivot_coefficients;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p[0].get_mpz_t(),
               gen[0].get_mpz_t());
    mpz_class a = p[0] / g, b = gen[0] / g;
    // b·p − a·gen has first coordinate 0
    mpz_class residual = b * p[1] - a * gen[1];
    std::vector<mpz_class> residual_coef(count);
    for (std::size_t q = 0; q < count; ++q) residual_coef[q] = b * pc[q] - a * unit[q];
    p = Vec2{s * p[0] + t * gen[0], s * p[1] + t * gen[1]};
    for (std::size_t q = 0; q < count; ++q) pc[q] = s * pc[q] + t * unit[q];
    fold_tail(residual, residual_coef);
  }

  if (lattice.tail != 0) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), lattice.pivot[1].get_mpz_t(), lattice.tail.get_mpz_t());
    lattice.pivot[1] -= f * lattice.tail;
    for (std::size_t q = 0; q < count; ++q)
      lattice.pivot_coefficients[q] -= f * lattice.tail_coefficients[q];
  }
  return lattice;
}

Membership lattice_membership(const Lattice2& lattice, const Vec2& target) {
  Membership out;
  out.target = target;
  mpz_class k1 = 0, k2 = 0;
  if (lattice.pivot[0] == 0) {
    if (target[0] != 0) return out;
  } else {
    if (!mpz_divisible_p(target[0].get_mpz_t(), lattice.pivot[0].get_mpz_t())) return out;
    k1 = target[0] / lattice.pivot[0];
  }
  mpz_class rest = target[1] - k1 * lattice.pivot[1];
  if (lattice.tail == 0) {
    if (rest != 0) return out;
  } else {
    if (!mpz_divisible_p(rest.get_mpz_t(), lattice.tail.get_mpz_t())) return out;
    k2 = rest / lattice.tail;
  }

  std::size_t count = lattice.generators.size();
  out.coefficients.resize(count);
  Vec2 check{0, 0};
  for (std::size_t q = 0; q < count; ++q) {
    out.coefficients[q] = k1 * lattice.pivot_coefficients[q] + k2 * lattice.tail_coefficients[q];
    check[0] += out.coefficients[q] * lattice.generators[q][0];
    check[1] += out.coefficients[q] * lattice.generators[q][1];
  }
  if (check != target) throw std::logic_error("lattice coefficients do not reconstruct target");
  out.member = true;
  return out;
}

Lattice2 module_lattice(const GammaTable& gamma) {
  std::vector<Vec2> generators;
  for (unsigned j = 0; j <= gamma.m; ++j)
    generators.push_back(Vec2{gamma.at(0, j), gamma.at(0, j) * j});
  return hermite_lattice(std::move(generators));
}

Vec2 v_vector(unsigned n) {
  mpz_class x = n;
  return {x - 1, (x * x * x - 6 * x * x + 9 * x - 3) * (x - 3) * x * (x - 1) / 2};
}

Vec2 w_vector(unsigned n) {
  mpz_class x = n;
  return {x - 1, -(x * x - x - 1) * (x - 3) * x * (x - 1) / 2};
}

LatticeReport module_membership(unsigned n) {
  if (n < 4) throw std::invalid_argument("module membership needs n >= 4");
  GammaCache cache(n);
  return module_membership(cache.table(n), cache.table(n - 1));
}

LatticeReport module_membership(const GammaTable& current, const GammaTable& previous) {
  if (current.n < 4 || previous.n + 1 != current.n)
    throw std::invalid_argument("module membership needs tables for n and n-1, n >= 4");
  LatticeReport report;
  report.n = current.n;
  report.module = module_lattice(current);
  report.previous_module = module_lattice(previous);
  report.v = lattice_membership(report.module, v_vector(current.n));
  report.w = lattice_membership(report.module, w_vector(current.n));
  report.w_previous = lattice_membership(report.previous_module, w_vector(previous.n));
  return report;
}

std::string_view to_string(ScanMode mode) noexcept {
  switch (mode) {
    case ScanMode::membership: return "membership";
    case ScanMode::full_solve: return "full_solve";
    case ScanMode::both: return "both";
  }
  return "?";
}

ScanMode parse_scan_mode(std::string_view text) {
  if (text == "membership") return ScanMode::membership;
  if (text == "full_solve" || text == "full-solve" || text == "solve") return ScanMode::full_solve;
  if (text == "both") return ScanMode::both;
  throw std::invalid_argument("unknown scan mode '" + std::string(text) + "'");
}

bool ScanEntry::passed() const {
  if (!lattice && !solve_attempted) return false;
  if (lattice && !lattice->solvable()) return false;
  if (solve_attempted && !(witness && witness->exact())) return false;
  return true;
}

bool ScanResult::all_passed() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed(); });
}

ScanResult scan(unsigned n_max, ScanMode mode, unsigned threads, const ScanProgress& progress) {
  if (n_max < 4) throw std::invalid_argument("scan needs n_max >= 4");
  ScanResult result;
  result.mode = mode;
  result.n_max = n_max;
  GammaCache cache(n_max, threads);
  GammaTable previous = cache.table(3);
  for (unsigned n = 4; n <= n_max; ++n) {
    GammaTable current = cache.table(n);
    ScanEntry entry;
    entry.n = n;
    if (mode != ScanMode::full_solve) entry.lattice = module_membership(current, previous);
    if (mode != ScanMode::membership) {
      entry.solve_attempted = true;
      entry.witness = solve_sn_system(build_system(current));
    }
    if (progress) progress(entry);
    result.entries.push_back(std::move(entry));
    previous = std::move(current);
  }
  return result;
}

}  // namespace contra
