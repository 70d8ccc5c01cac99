#include <doctest.h>

#include "contra/json_report.hpp"

using namespace contra;
using nlohmann::json;

TEST_CASE("envelope") {
  json doc = envelope("gamma", true, {{"value", "3"}});
  CHECK(doc["schema"] == kSchemaVersion);
  CHECK(doc["command"] == "gamma");
  CHECK(doc["verdict"] == "pass");
  CHECK(doc["value"] == "3");
  CHECK(envelope("gamma", false, json::object())["verdict"] == "fail");
}

TEST_CASE("certificate document") {
  ContradictingPair pair = build_pair(make_space(4, Sign::plus), 2, Sign::plus);
  Certificate cert = verify_z_divisibility(pair).merged(verify_group_sample(pair, 20, 8, 1));
  json doc = to_json(cert);
  CHECK(doc["parameters"]["d"] == 4);
  CHECK(doc["counts"]["b_size"] == "36");
  CHECK(doc["counts"]["modulus"] == "8");
  CHECK(doc.contains("z_route"));
  CHECK(doc.contains("group_sample"));
  // identical input, identical bytes
  CHECK(doc.dump() == to_json(cert).dump());
  Certificate again = verify_z_divisibility(pair).merged(verify_group_sample(pair, 20, 8, 1));
  CHECK(doc.dump() == to_json(again).dump());
}

TEST_CASE("big integers are decimal strings") {
  GammaTable table = gamma_table(30);
  LatticeReport report = module_membership(30);
  json doc = to_json(report);
  std::string text = doc.dump();
  CHECK(text.find("e+") == std::string::npos);
  json witness_doc = to_json(*solve_sn_system(build_system(table)));
  for (const char* key : {"y0", "y1"})
    for (const auto& v : witness_doc[key]) CHECK(v.is_string());
  ScanResult result = scan(8, ScanMode::both, 1, {});
  json scan_doc = to_json(result);
  CHECK(scan_doc["entries"].size() == 5);
}

TEST_CASE("count reports") {
  json doc = to_json(count_reports(3, Sign::minus));
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 6);
  CHECK(doc[0]["quantity"] == "total.singular");
  CHECK(doc[0]["formula_value"] == "27");
  CHECK(doc[0]["enumerated_value"] == "27");
}
