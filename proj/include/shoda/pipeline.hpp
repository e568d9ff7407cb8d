#pragma once

#include <string>

#include <json.hpp>

#include "shoda/io.hpp"

namespace shoda {

struct RunConfig {
  std::string group;       // "builtin:<name>", a file path, or inline JSON
  int max_order = 5000;    // pipeline cap
  int subgroup_cap = 2000; // subgroup-enumeration cap
  int jobs = 1;
};

GroupPtr load_group(const RunConfig& cfg);

// selector: a canonical index ("3" or "index:3"), generator words
// ("gens:x5,x6"), or an explicit member list ("members:0,5,10").
// Must resolve to exactly one normal subgroup.
Subgroup resolve_normal_selector(GroupPtr g, const std::string& selector);

nlohmann::json run_tree(GroupPtr g, const Subgroup& n, int subgroup_cap = 2000);
nlohmann::json run_pairs(GroupPtr g, const RunConfig& cfg, bool with_pci);
nlohmann::json run_components(GroupPtr g, const RunConfig& cfg);
nlohmann::json run_classc(GroupPtr g, const RunConfig& cfg);

// the full battery: completeness, alpha oracle, brute-force Shoda oracle,
// dimension audits, strongness coherence; "passed" carries the verdict
nlohmann::json run_verify(GroupPtr g, const RunConfig& cfg);

}  // namespace shoda
