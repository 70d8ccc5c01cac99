// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include <gmpxx.h>
#include <json.hpp>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "contra/contradicting_subsets.hpp"
#include "contra/gf2_quadspace.hpp"
#include "contra/orthogonal_counts.hpp"
#include "contra/sn_lattice.hpp"
#include "oracles.hpp"

using namespace contra;

namespace {

// Time budgets in seconds; exactness tolerances are equality throughout.
constexpr double kBudgetCounts = 10.0;
constexpr double kBudgetTheorem = 30.0;
constexpr double kBudgetLargeD = 60.0;
constexpr double kBudgetGamma = 5.0;
constexpr double kBudgetMembership100 = 1800.0;
constexpr double kBudgetSolve40 = 120.0;

constexpr std::uint64_t kSeedLargeD = 0x5eed0003;
constexpr std::uint64_t kSeedGroup = 0x5eed0004;
constexpr std::uint64_t kSeedFixtures = 0x5eed0009;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail.str("");
      detail << "first failure: " << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failures = 0;

void criterion(int id, const std::string& title, double budget,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail.str("");
    out.detail << "exception: " << e.what();
  }
  double elapsed = seconds_since(start);
  if (budget > 0 && elapsed > budget) {
    if (out.pass) out.detail.str("");
    out.pass = false;
    out.detail << " over budget";
  }
  if (!out.pass) ++failures;
  std::cout << "criterion " << std::setw(2) << id << ": " << (out.pass ? "PASS" : "FAIL") << "  "
            << title << "  [" << std::fixed << std::setprecision(2) << elapsed << " s";
  if (budget > 0) std::cout << " of " << std::setprecision(0) << budget << " s";
  std::cout << "] " << out.detail.str() << std::endl;
}

std::string label(unsigned d, Sign sign) {
  return "d=" + std::to_string(d) + " " + std::string(to_string(sign));
}

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(CONTRA_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

PartitionType type_of(unsigned n, const std::vector<unsigned>& parts) {
  PartitionType p{n, std::vector<unsigned>(n, 0)};
  for (unsigned k : parts) ++p.multiplicity[k - 1];
  return p;
}

void counts_suite(Outcome& out) {
  unsigned checked = 0;
  for (unsigned d = 1; d <= 6; ++d)
    for (Sign sign : {Sign::plus, Sign::minus}) {
      oracle::CoordinateForm form{d, sign == Sign::minus};
      std::vector<unsigned> theta(form.size());
      for (std::uint64_t x = 0; x < form.size(); ++x) theta[x] = form.theta(x);

      std::uint64_t singular = 0, nonsingular = 0;
      for (std::uint64_t x = 1; x < form.size(); ++x) (theta[x] ? nonsingular : singular) += 1;

      // (inside, outside) counts of nonsingular vectors relative to v, per class
      std::map<unsigned, std::set<std::pair<std::uint64_t, std::uint64_t>>> profile;
      for (std::uint64_t v = 1; v < form.size(); ++v) {
        std::uint64_t inside = 0, outside = 0;
        for (std::uint64_t x = 0; x < form.size(); ++x)
          if (theta[x]) (form.phi(x, v) ? outside : inside) += 1;
        profile[theta[v]].insert({inside, outside});
      }
      for (const auto& [cls, values] : profile)
        out.require(values.size() == 1, label(d, sign) + " counts not uniform over a class");

      std::map<std::string, std::uint64_t> expected{{"total.singular", singular},
                                                    {"total.nonsingular", nonsingular}};
      if (profile.count(1)) {
        expected["nonsingular_v.perp"] = profile[1].begin()->first;
        expected["nonsingular_v.not_perp"] = profile[1].begin()->second;
      }
      if (profile.count(0)) {
        expected["singular_v.perp"] = profile[0].begin()->first;
        expected["singular_v.not_perp"] = profile[0].begin()->second;
      }
      auto reports = count_reports(d, sign, 1);
      out.require(reports.size() == expected.size(), label(d, sign) + " report count");
      for (const auto& r : reports) {
        std::string where = label(d, sign) + " " + r.quantity;
        out.require(expected.count(r.quantity) == 1, where + " unexpected");
        out.require(r.formula_value == expected[r.quantity], where + " formula");
        out.require(r.enumerated_value == expected[r.quantity], where + " enumeration");
        out.require(r.agrees(), where + " disagreement");
        ++checked;
      }
    }
  out.detail << checked << " counts across 12 spaces";
}

void theorem_suite(Outcome& out) {
  unsigned configs = 0;
  for (unsigned d = 4; d <= 6; ++d)
    for (Sign parent : {Sign::plus, Sign::minus})
      for (unsigned a = 2; a + 2 <= d; ++a)
        for (Sign su : {Sign::plus, Sign::minus}) {
          ContradictingPair pair = build_pair(make_space(d, parent), a, su);
          Certificate cert = verify_z_divisibility(pair, CountRoute::factored);
          std::string where = label(d, parent) + " a=" + std::to_string(a) + " sign_u=" +
                              std::string(to_string(su));
          std::int64_t eps = sign_value(parent);
          auto expected_z = static_cast<std::uint64_t>(
              (std::int64_t{1} << (2 * d - 1)) - eps * (std::int64_t{1} << (d - 1)));
          out.require(cert.z_route && cert.z_route->route == CountRoute::factored,
                      where + " route");
          out.require(cert.z_route->z_checks == expected_z, where + " |V1| coverage");
          out.require(cert.z_route->nonzero_residues == 0, where + " residue");
          out.require(cert.modulus == (std::uint64_t{1} << (d - 1)), where + " modulus");
          out.require((cert.b_size * cert.c_size) % cert.modulus != 0, where + " |B||C|");
          out.require(cert.passed(), where + " verdict");
          ++configs;
        }
  out.detail << configs << " configurations";
}

void large_d_smoke(Outcome& out) {
  std::mt19937_64 rng(kSeedLargeD);
  const std::tuple<Sign, unsigned, Sign> configs[] = {{Sign::plus, 5, Sign::plus},
                                                      {Sign::minus, 4, Sign::minus}};
  for (auto [parent, a, su] : configs) {
    ContradictingPair pair = build_pair(make_space(10, parent), a, su);
    Certificate cert = verify_z_divisibility(pair, CountRoute::factored);
    out.require(cert.passed(), label(10, parent) + " factored verification");

    const QuadSpace& s = pair.space();
    FactoredCounter counter(pair.decomposition());
    unsigned sampled = 0, cross_checked = 0;
    while (sampled < 1000) {
      std::uint64_t z = rng() & s.full_mask();
      if (!s.theta_raw(z)) continue;
      ++sampled;
      std::uint64_t factored = counter.count_raw(z);
      out.require(factored == naive_intersection_count(pair, z), label(10, parent) + " naive");
      out.require(factored % cert.modulus == 0, label(10, parent) + " divisibility");
      if (cross_checked < 16) {
        std::uint64_t direct = 0;
        for (std::uint64_t x : pair.b()) direct += oracle::CoordinateForm::phi(x, z, 10) == 0;
        out.require(factored == direct, label(10, parent) + " coordinate oracle");
        ++cross_checked;
      }
    }
  }
  out.detail << "2 configurations, 1000 random z each";
}

void group_sample_suite(Outcome& out) {
  for (Sign parent : {Sign::plus, Sign::minus}) {
    ContradictingPair pair = build_pair(make_space(4, parent), 2, Sign::plus);
    Certificate cert = verify_group_sample(pair, 500, 8, kSeedGroup);
    std::string where = label(4, parent);
    out.require(cert.group_sample && cert.group_sample->samples == 500, where + " samples");
    out.require(cert.group_sample->nonzero_residues == 0, where + " divisibility");
    out.require(cert.group_sample->reduction_mismatches == 0, where + " reduction identity");
    out.require(cert.passed(), where + " verdict");
  }
  out.detail << "500 samples per sign";
}

void negative_control(Outcome& out) {
  ContradictingPair broken =
      build_pair(make_space(4, Sign::plus), 2, Sign::plus).without_b_element(0);
  for (CountRoute route : {CountRoute::factored, CountRoute::transform, CountRoute::naive})
    out.require(!verify_z_divisibility(broken, route).passed(),
                std::string("library route ") + std::string(to_string(route)));
  out.require(!verify_group_sample(broken, 100, 8, kSeedGroup).passed(), "library group sample");

  CliRun intact = run_cli("verify-theorem --d 4 --samples 50");
  out.require(intact.status == 0, "intact B should exit 0");
  CliRun corrupt = run_cli("verify-theorem --d 4 --samples 50 --corrupt-b");
  out.require(corrupt.status == 1, "corrupted B should exit 1");
  auto doc = nlohmann::json::parse(corrupt.out);
  out.require(doc["verdict"] == "fail", "corrupted B verdict");
  out.detail << "cli exit " << corrupt.status;
}

void gamma_oracle(Outcome& out) {
  GammaCache cache(8, 1);
  unsigned checked = 0;
  for (unsigned n = 1; n <= 8; ++n) {
    auto buckets = oracle::class_buckets(n);
    for (unsigned i = 0; i <= 1; ++i)
      for (unsigned j = 0; j <= n / 2; ++j) {
        mpz_class expected = oracle::bucket_gamma(buckets, i, j);
        std::string where = "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                            " j=" + std::to_string(j);
        out.require(gamma(n, i, j) == expected, where);
        out.require(cache.value(n, i, j) == expected, where + " cached");
        ++checked;
      }
  }
  out.detail << checked << " coefficients";
}

void class_size_completeness(Outcome& out) {
  for (unsigned n = 1; n <= 30; ++n) {
    mpz_class total = 0, factorial;
    for (const auto& parts : oracle::partitions_brute(n, 1)) total += class_size(type_of(n, parts));
    mpz_fac_ui(factorial.get_mpz_t(), n);
    out.require(total == factorial, "n=" + std::to_string(n));
  }
  out.detail << "n = 1..30";
}

void sn_reproduction(Outcome& out) {
  auto start = std::chrono::steady_clock::now();
  ScanResult membership = scan(100, ScanMode::membership, 0, {});
  double membership_seconds = seconds_since(start);
  out.require(membership.entries.size() == 97, "membership entry count");
  for (const auto& e : membership.entries)
    out.require(e.lattice && e.lattice->v.member && e.lattice->w_previous.member,
                "membership n=" + std::to_string(e.n));
  out.require(membership_seconds <= kBudgetMembership100, "membership budget");

  start = std::chrono::steady_clock::now();
  ScanResult solved = scan(40, ScanMode::full_solve, 0, {});
  double solve_seconds = seconds_since(start);
  out.require(solved.entries.size() == 37, "solve entry count");
  for (const auto& e : solved.entries) {
    std::string where = "solve n=" + std::to_string(e.n);
    out.require(e.witness && e.witness->exact(), where);
    if (!e.witness) continue;
    // substitute into an independently assembled system
    SnSystem sys = build_system(e.n);
    for (std::size_t r = 0; r < sys.system.rows(); ++r) {
      mpz_class lhs = 0;
      for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j <= sys.m(); ++j)
          lhs += sys.system.matrix[r][sys.column(i, j)] * e.witness->y[i][j];
      out.require(lhs == sys.system.rhs[r], where + " residual");
    }
  }
  out.require(solve_seconds <= kBudgetSolve40, "solve budget");
  out.detail << std::fixed << std::setprecision(2) << "membership n<=100 " << membership_seconds
             << " s, solve n<=40 " << solve_seconds << " s";
}

void translate_sum_suite(Outcome& out) {
  std::mt19937_64 rng(kSeedFixtures);
  for (int trial = 0; trial < 20; ++trial) {
    PermutationSet s = oracle::random_regular_fixture(rng);
    std::string where = "fixture " + std::to_string(trial);
    out.require(s.degree() <= 64, where + " degree");
    out.require(check_sharply_transitive(s), where + " sharply transitive");
    auto b = oracle::random_subset(s.degree(), rng);
    auto c = oracle::random_subset(s.degree(), rng);
    std::vector<bool> in_b(s.degree(), false);
    for (auto x : b) in_b[x] = true;
    std::uint64_t direct = 0;
    for (const auto& g : s.elements())
      for (auto x : c) direct += in_b[g[x]];
    std::uint64_t expected = b.size() * c.size();
    out.require(direct == expected, where + " direct sum");
    out.require(translate_intersection_sum(s, b, c) == expected, where + " library sum");
  }
  out.detail << "20 fixtures";
}

void dye_suite(Outcome& out) {
  unsigned checked = 0;
  for (unsigned d = 1; d <= 3; ++d)
    for (Sign sign : {Sign::plus, Sign::minus}) {
      QuadSpace s = make_space(d, sign);
      oracle::CoordinateForm form{d, sign == Sign::minus};
      std::uint64_t plus_zeros = (std::uint64_t{1} << (2 * d - 1)) + (std::uint64_t{1} << (d - 1));
      for (std::uint64_t a = 0; a < form.size(); ++a) {
        std::uint64_t zeros = 0;
        for (std::uint64_t x = 0; x < form.size(); ++x)
          zeros += ((form.theta(x) + form.phi(x, a)) % 2) == 0;
        Sign oracle_sign = zeros == plus_zeros ? Sign::plus : Sign::minus;
        BitVector shift(a, s.dim());
        Sign library_sign =
            witt_sign_by_count([&](const BitVector& v) { return theta_shift(s, shift, v); },
                               s.dim())
                .sign;
        std::string where = label(d, sign) + " a=" + std::to_string(a);
        out.require(oracle_sign == library_sign, where + " oracle vs library");
        out.require((library_sign == sign) == (form.theta(a) == 0), where + " criterion");
        ++checked;
      }
    }
  out.detail << checked << " shifts";
}

}  // namespace

int main() {
  criterion(1, "singular/nonsingular count formulas vs enumeration, d<=6", kBudgetCounts,
            counts_suite);
  criterion(2, "z-route divisibility for all configurations, d=4..6", kBudgetTheorem,
            theorem_suite);
  criterion(3, "d=10 factored verification, factored vs naive on 1000 z", kBudgetLargeD,
            large_d_smoke);
  criterion(4, "500 transvection-word samples at d=4", 0, group_sample_suite);
  criterion(5, "corrupted B is rejected", 0, negative_control);
  criterion(6, "gamma vs S_n cycle-type buckets, n<=8", kBudgetGamma, gamma_oracle);
  criterion(7, "class sizes sum to n!, n<=30", 0, class_size_completeness);
  criterion(8, "S_n membership n<=100, full solve n<=40", kBudgetMembership100 + kBudgetSolve40,
            sn_reproduction);
  criterion(9, "sharply transitive sum identity on 20 random fixtures", 0, translate_sum_suite);
  criterion(10, "shifted-form sign criterion, d<=3", 0, dye_suite);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures;
}
