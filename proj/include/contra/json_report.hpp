#pragma once

#include <json.hpp>

#include <vector>

#include "contra/contradicting_subsets.hpp"
#include "contra/orthogonal_counts.hpp"
#include "contra/sn_lattice.hpp"

namespace contra {

// Documents carry "schema": 1. Every integer that can exceed 53 bits is a
// decimal string.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const std::vector<CountReport>& reports);
nlohmann::json to_json(const Membership& membership);
nlohmann::json to_json(const Lattice2& lattice);
nlohmann::json to_json(const LatticeReport& report);
nlohmann::json to_json(const SolvabilityWitness& witness);
nlohmann::json to_json(const ScanEntry& entry);
nlohmann::json to_json(const ScanResult& result);

/// Wraps a payload as {"schema": 1, "command": ..., "verdict": ..., ...}.
nlohmann::json envelope(std::string_view command, bool pass, nlohmann::json payload);

}  // namespace contra
