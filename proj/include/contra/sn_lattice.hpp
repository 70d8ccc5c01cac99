#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace contra {

/// Cycle type of a permutation of n points: multiplicity[k−1] = e_k.
struct PartitionType {
  unsigned n = 0;
  std::vector<unsigned> multiplicity;

  unsigned count(unsigned k) const noexcept {
    return k >= 1 && k <= multiplicity.size() ? multiplicity[k - 1] : 0;
  }
  std::vector<unsigned> parts() const;  // non-increasing
  friend bool operator==(const PartitionType&, const PartitionType&) = default;
};

/// Streams every cycle type of n with e₁ = i and e₂ = j, i.e. the partitions
/// of n − i − 2j into parts ≥ 3, largest parts first.
void enumerate_partition_types(unsigned n, unsigned i, unsigned j,
                               const std::function<void(const PartitionType&)>& visit);

/// n! / ∏ k^{e_k} e_k!
mpz_class class_size(const PartitionType& p);

std::vector<unsigned> primes_up_to(unsigned n);
/// Exponent of p in n!.
unsigned legendre_exponent(unsigned n, unsigned p);

/// gcd of the class sizes with i fixed points and j 2-cycles (0 if there are
/// none). Works on prime exponents and stops once the gcd reaches 1.
mpz_class gamma(unsigned n, unsigned i, unsigned j);

struct GammaTable {
  unsigned n = 0;
  unsigned m = 0;  // ⌊n/2⌋
  std::array<std::vector<mpz_class>, 2> values;  // values[i][j], j = 0..m

  const mpz_class& at(unsigned i, unsigned j) const { return values.at(i).at(j); }
};

/// Γ tables for every n ≤ n_max from one pass over all partitions of sums
/// ≤ n_max into parts ≥ 3. Γ^{(n)}_{i,j} depends on n only through v_p(n!)
/// and the remainder r = n − i − 2j.
class GammaCache {
 public:
  explicit GammaCache(unsigned n_max, unsigned threads = 0);

  unsigned n_max() const noexcept { return n_max_; }
  GammaTable table(unsigned n) const;
  mpz_class value(unsigned n, unsigned i, unsigned j) const;

 private:
  unsigned n_max_;
  std::vector<unsigned> primes_;
  // max over partitions of r into parts ≥ 3 of v_p(∏ k^{e_k} e_k!), row-major [r][prime]
  std::vector<std::uint16_t> best_;
  std::vector<std::uint8_t> reachable_;
};

GammaTable gamma_table(unsigned n);

// ---- integer linear systems ----

struct LinearSystem {
  std::vector<std::vector<mpz_class>> matrix;  // rows × cols
  std::vector<mpz_class> rhs;

  std::size_t rows() const noexcept { return matrix.size(); }
  std::size_t cols() const noexcept { return matrix.empty() ? 0 : matrix.front().size(); }
};

/// Exact integer solution of A·y = b via a column Hermite normal form with
/// recorded unimodular transformation. nullopt means no integer solution
/// exists. A returned solution has been verified by substitution.
std::optional<std::vector<mpz_class>> solve_integer(const LinearSystem& system);

/// The three-equation system in unknowns y_{i,j}, i ∈ {0,1}, j = 0..m;
/// unknown (i,j) is column i·(m+1)+j.
struct SnSystem {
  GammaTable gamma;
  LinearSystem system;

  unsigned n() const noexcept { return gamma.n; }
  unsigned m() const noexcept { return gamma.m; }
  std::size_t column(unsigned i, unsigned j) const noexcept { return i * (gamma.m + 1) + j; }
};

SnSystem build_system(unsigned n);  // n ≥ 4
SnSystem build_system(GammaTable gamma);

struct SolvabilityWitness {
  unsigned n = 0;
  unsigned m = 0;
  std::array<std::vector<mpz_class>, 2> y;
  std::array<mpz_class, 3> residuals;

  bool exact() const { return residuals[0] == 0 && residuals[1] == 0 && residuals[2] == 0; }
};

/// Left-hand sides minus right-hand sides, computed straight from the Γ
/// values rather than from an assembled matrix.
std::array<mpz_class, 3> sn_residuals(const GammaTable& gamma,
                                      const std::array<std::vector<mpz_class>, 2>& y);

std::optional<SolvabilityWitness> solve_sn_system(const SnSystem& system);

// ---- rank ≤ 2 lattices in ℤ² ----

using Vec2 = std::array<mpz_class, 2>;

/// Hermite basis {(p₁, p₂), (0, q₂)} of the lattice spanned by `generators`,
/// with p₁ ≥ 0, q₂ ≥ 0 and 0 ≤ p₂ < q₂ when q₂ > 0. Each basis vector
/// carries its integer coefficients over the generators.
struct Lattice2 {
  std::vector<Vec2> generators;
  Vec2 pivot{0, 0};
  mpz_class tail = 0;  // q₂
  std::vector<mpz_class> pivot_coefficients;
  std::vector<mpz_class> tail_coefficients;

  unsigned rank() const { return (pivot[0] != 0 ? 1U : 0U) + (tail != 0 ? 1U : 0U); }
};

Lattice2 hermite_lattice(std::vector<Vec2> generators);

struct Membership {
  Vec2 target{0, 0};
  bool member = false;
  std::vector<mpz_class> coefficients;  // over the generators, when member
};

/// Reconstruction is checked before a positive verdict is returned.
Membership lattice_membership(const Lattice2& lattice, const Vec2& target);

/// Generators Γ_{0,j}·(1, j) for j = 0..m.
Lattice2 module_lattice(const GammaTable& gamma);

Vec2 v_vector(unsigned n);
Vec2 w_vector(unsigned n);

struct LatticeReport {
  unsigned n = 0;
  Lattice2 module;           // M_n
  Lattice2 previous_module;  // M_{n−1}
  Membership v;              // v_n ∈ M_n
  Membership w;              // w_n ∈ M_n
  Membership w_previous;     // w_{n−1} ∈ M_{n−1}

  /// The sufficient condition: v_n ∈ M_n and w_{n−1} ∈ M_{n−1}.
  bool solvable() const noexcept { return v.member && w_previous.member; }
};

LatticeReport module_membership(unsigned n);  // n ≥ 4
LatticeReport module_membership(const GammaTable& current, const GammaTable& previous);

enum class ScanMode { membership, full_solve, both };
std::string_view to_string(ScanMode mode) noexcept;
ScanMode parse_scan_mode(std::string_view text);

struct ScanEntry {
  unsigned n = 0;
  std::optional<LatticeReport> lattice;
  bool solve_attempted = false;
  std::optional<SolvabilityWitness> witness;

  bool passed() const;
};

struct ScanResult {
  ScanMode mode = ScanMode::both;
  unsigned n_max = 0;
  std::vector<ScanEntry> entries;

  bool all_passed() const;
};

using ScanProgress = std::function<void(const ScanEntry&)>;

ScanResult scan(unsigned n_max, ScanMode mode, unsigned threads = 0,
                const ScanProgress& progress = {});

}  // namespace contra
