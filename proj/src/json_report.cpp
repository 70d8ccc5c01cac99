#include "contra/json_report.hpp"

#include <string>

namespace contra {
namespace {

using nlohmann::json;

std::string dec(const mpz_class& x) { return x.get_str(); }
std::string dec(std::uint64_t x) { return std::to_string(x); }

json dec_list(const std::vector<mpz_class>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(dec(v));
  return out;
}

json vec2(const Vec2& v) { return json::array({dec(v[0]), dec(v[1])}); }

}  // namespace

json to_json(const Certificate& cert) {
  json out{
      {"parameters",
       {{"d", cert.d},
        {"sign", to_string(cert.sign)},
        {"a", cert.a},
        {"b", cert.b},
        {"sign_u", to_string(cert.sign_u)},
        {"sign_w", to_string(cert.sign_w)},
        {"c", cert.c.to_string()}}},
      {"counts",
       {{"b_size", dec(cert.b_size)},
        {"c_size", dec(cert.c_size)},
        {"modulus", dec(cert.modulus)},
        {"b_times_c", dec(cert.b_size * cert.c_size)},
        {"modulus_divides_b_times_c", cert.modulus_divides_product()}}},
      {"b_is_product", cert.b_is_product},
      {"verdict", cert.passed() ? "pass" : "fail"},
  };
  if (cert.z_route) {
    const auto& z = *cert.z_route;
    out["z_route"] = {{"route", to_string(z.route)},
                      {"z_checks", dec(z.z_checks)},
                      {"residue_min", dec(z.residue_min)},
                      {"residue_max", dec(z.residue_max)},
                      {"nonzero_residues", dec(z.nonzero_residues)}};
  }
  if (cert.group_sample) {
    const auto& g = *cert.group_sample;
    out["group_sample"] = {{"samples", dec(g.samples)},
                           {"word_length", g.word_length},
                           {"seed", dec(g.seed)},
                           {"residue_min", dec(g.residue_min)},
                           {"residue_max", dec(g.residue_max)},
                           {"nonzero_residues", dec(g.nonzero_residues)},
                           {"reduction_mismatches", dec(g.reduction_mismatches)}};
  }
  return out;
}

json to_json(const std::vector<CountReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    json row{{"quantity", r.quantity},
             {"d", r.d},
             {"sign", to_string(r.sign)},
             {"vector_class", to_string(r.vector_class)},
             {"formula_value", dec(r.formula_value)},
             {"enumerated_value", r.enumerated_value ? json(dec(*r.enumerated_value)) : json()},
             {"representative_uniform", r.uniform},
             {"agrees", r.agrees()}};
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Membership& membership) {
  json out{{"target", vec2(membership.target)}, {"member", membership.member}};
  if (membership.member) out["coefficients"] = dec_list(membership.coefficients);
  return out;
}

json to_json(const Lattice2& lattice) {
  json basis = json::array();
  if (lattice.pivot[0] != 0) basis.push_back(vec2(lattice.pivot));
  if (lattice.tail != 0) basis.push_back(vec2(Vec2{0, lattice.tail}));
  json generators = json::array();
  for (const auto& g : lattice.generators) generators.push_back(vec2(g));
  return {{"rank", lattice.rank()}, {"hnf_basis", basis}, {"generators", generators}};
}

json to_json(const LatticeReport& report) {
  return {{"n", report.n},
          {"module", to_json(report.module)},
          {"previous_module", to_json(report.previous_module)},
          {"v_n", to_json(report.v)},
          {"w_n", to_json(report.w)},
          {"w_n_minus_1", to_json(report.w_previous)},
          {"solvable", report.solvable()}};
}

json to_json(const SolvabilityWitness& witness) {
  json residuals = json::array();
  for (const auto& r : witness.residuals) residuals.push_back(dec(r));
  return {{"n", witness.n},
          {"m", witness.m},
          {"y0", dec_list(witness.y[0])},
          {"y1", dec_list(witness.y[1])},
          {"residuals", residuals},
          {"exact", witness.exact()}};
}

json to_json(const ScanEntry& entry) {
  json out{{"n", entry.n}, {"passed", entry.passed()}};
  if (entry.lattice) out["membership"] = to_json(*entry.lattice);
  if (entry.solve_attempted)
    out["solve"] = entry.witness ? json{{"solvable", true}, {"witness", to_json(*entry.witness)}}
                                 : json{{"solvable", false}};
  return out;
}

json to_json(const ScanResult& result) {
  json entries = json::array();
  std::vector<unsigned> failures;
  for (const auto& e : result.entries) {
    entries.push_back(to_json(e));
    if (!e.passed()) failures.push_back(e.n);
  }
  return {{"mode", to_string(result.mode)},
          {"n_min", 4},
          {"n_max", result.n_max},
          {"failures", failures},
          {"entries", entries}};
}

json envelope(std::string_view command, bool pass, json payload) {
  json out{{"schema", kSchemaVersion},
           {"command", std::string(command)},
           {"verdict", pass ? "pass" : "fail"}};
  for (auto& [key, value] : payload.items()) out[key] = std::move(value);
  return out;
}

}  // namespace contra
