// contra_cli: verification front end. One JSON document per run on stdout
// (or --out). Exit codes: 0 verified, 1 verification failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "contra/contradicting_subsets.hpp"
#include "contra/json_report.hpp"
#include "contra/orthogonal_counts.hpp"
#include "contra/sn_lattice.hpp"

namespace {

using namespace contra;
using nlohmann::json;

constexpr int kExitVerified = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

constexpr unsigned kCountsMaxD = 32;
constexpr unsigned kDefaultScanLimit = 60;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned d = 0;
  std::string sign = "plus";
  unsigned a = 2;
  std::string sign_u = "plus";
  std::uint64_t samples = 500;
  std::optional<unsigned> word_length;
  std::uint64_t seed = 1;
  std::string route = "factored";
  bool corrupt_b = false;

  unsigned n_max = 40;
  std::string mode = "both";
  bool extended = false;
  bool progress = false;

  unsigned n = 0;
  unsigned i = 0;
  unsigned j = 0;

  unsigned threads = 0;
  std::string out;
  int verbosity = 0;
};

Sign sign_arg(const std::string& text) {
  try {
    return parse_sign(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

CountRoute route_arg(const std::string& text) {
  if (text == "factored") return CountRoute::factored;
  if (text == "transform") return CountRoute::transform;
  if (text == "naive") return CountRoute::naive;
  throw UsageError("unknown route '" + text + "'");
}

void emit(const RunConfig& cfg, const json& doc) {
  std::string text = doc.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw std::runtime_error("cannot open output file " + cfg.out);
  file << text;
}

int run_verify_counts(const RunConfig& cfg) {
  if (cfg.d < 1 || cfg.d > kCountsMaxD) throw UsageError("--d must be in [1, 32]");
  Sign sign = sign_arg(cfg.sign);
  auto reports = count_reports(cfg.d, sign, cfg.threads);
  bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.agrees(); });
  std::string oracle = cfg.d <= kPairwiseOracleMaxD    ? "pairwise"
                       : cfg.d <= kTransformOracleMaxD ? "transform"
                                                       : "none";
  emit(cfg, envelope("verify-counts", pass,
                     {{"parameters", {{"d", cfg.d}, {"sign", to_string(sign)}}},
                      {"oracle", oracle},
                      {"reports", to_json(reports)}}));
  if (cfg.verbosity > 0)
    std::cerr << "verify-counts d=" << cfg.d << " " << to_string(sign) << ": "
              << (pass ? "pass" : "FAIL") << "\n";
  return pass ? kExitVerified : kExitFailed;
}

int run_verify_theorem(const RunConfig& cfg) {
  if (cfg.d < 4 || cfg.d > kMaxPairD) throw UsageError("--d must be in [4, 12]");
  if (cfg.a < 2 || cfg.a > cfg.d - 2) throw UsageError("--a must satisfy 2 <= a <= d-2");
  Sign sign = sign_arg(cfg.sign);
  Sign sign_u = sign_arg(cfg.sign_u);
  CountRoute route = route_arg(cfg.route);
  unsigned word_length = cfg.word_length.value_or(2 * cfg.d);

  ContradictingPair pair = build_pair(make_space(cfg.d, sign), cfg.a, sign_u);
  if (cfg.corrupt_b) pair = pair.without_b_element(0);
  Certificate cert = verify_z_divisibility(pair, route, cfg.threads)
                         .merged(verify_group_sample(pair, cfg.samples, word_length, cfg.seed));
  bool pass = cert.passed();
  json payload = to_json(cert);
  payload.erase("verdict");
  emit(cfg, envelope("verify-theorem", pass, {{"certificate", payload}}));
  if (cfg.verbosity > 0)
    std::cerr << "verify-theorem d=" << cfg.d << " " << to_string(sign) << " a=" << cfg.a
              << " sign_u=" << to_string(sign_u) << ": |B|=" << cert.b_size
              << " |C|=" << cert.c_size << " modulus=" << cert.modulus << " "
              << (pass ? "pass" : "FAIL") << "\n";
  return pass ? kExitVerified : kExitFailed;
}

int run_sn(const RunConfig& cfg) {
  if (cfg.n_max < 4) throw UsageError("--max must be at least 4");
  if (cfg.n_max > kDefaultScanLimit && !cfg.extended)
    throw UsageError("--max above 60 requires --extended");
  ScanMode mode;
  try {
    mode = parse_scan_mode(cfg.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool stream = cfg.progress || cfg.extended;
  ScanResult result = scan(cfg.n_max, mode, cfg.threads, [&](const ScanEntry& e) {
    if (stream) std::cerr << "n=" << e.n << " " << (e.passed() ? "pass" : "FAIL") << "\n";
  });
  bool pass = result.all_passed();
  emit(cfg, envelope("sn", pass, {{"scan", to_json(result)}}));
  return pass ? kExitVerified : kExitFailed;
}

int run_gamma(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.i > 1) throw UsageError("--i must be 0 or 1");
  if (cfg.j > cfg.n / 2) throw UsageError("--j must be at most n/2");
  std::cout << gamma(cfg.n, cfg.i, cfg.j).get_str() << "\n";
  return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contradicting-subset certificates for O±(2d,2) and the S_n integer system"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  app.add_option("--out", cfg.out, "Write JSON here instead of stdout");
  app.add_flag("-v,--verbose", cfg.verbosity, "Summary on stderr");

  auto* counts = app.add_subcommand("verify-counts", "Check the singular/nonsingular counts");
  counts->add_option("--d", cfg.d, "Half-dimension")->required();
  counts->add_option("--sign", cfg.sign, "plus or minus");

  auto* theorem = app.add_subcommand("verify-theorem", "Build and verify B, C");
  theorem->add_option("--d", cfg.d, "Half-dimension (4..12)")->required();
  theorem->add_option("--sign", cfg.sign, "Parent sign");
  theorem->add_option("--a", cfg.a, "Half-dimension of U");
  theorem->add_option("--sign-u", cfg.sign_u, "Sign of U");
  theorem->add_option("--samples", cfg.samples, "Sampled group elements");
  theorem->add_option("--word-length", cfg.word_length, "Transvections per sample (default 2d)");
  theorem->add_option("--seed", cfg.seed, "PRNG seed");
  theorem->add_option("--route", cfg.route, "z-route counter: factored, transform, naive");
  theorem->add_flag("--corrupt-b", cfg.corrupt_b, "Drop one element of B (negative control)");

  auto* sn = app.add_subcommand("sn", "Scan the S_n system for 4 <= n <= max");
  sn->add_option("--max", cfg.n_max, "Largest n")->required();
  sn->add_option("--mode", cfg.mode, "membership, full_solve or both");
  sn->add_flag("--extended", cfg.extended, "Allow max above 60");
  sn->add_flag("--progress", cfg.progress, "Per-n progress on stderr");

  auto* gam = app.add_subcommand("gamma", "Print one Gamma coefficient");
  gam->add_option("--n", cfg.n)->required();
  gam->add_option("--i", cfg.i)->required();
  gam->add_option("--j", cfg.j)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*counts) return run_verify_counts(cfg);
    if (*theorem) return run_verify_theorem(cfg);
    if (*sn) return run_sn(cfg);
    if (*gam) return run_gamma(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
