#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace antifactor::cli {

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`. Exit codes: 0 found / true / all pass, 1 not found /
// false, 2 input error, 3 resource cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CampaignConfig {
  int count = 500;
  std::vector<int> degrees{3, 4, 5};  // assigned round-robin
  int n_min = 4;
  int n_max = 50;
  std::uint64_t seed = 0;
  std::uint64_t budget = 50'000'000;
  int oracle_max_x = 0;  // cross-check with the oracle up to this |X|
  int enum_cap = 24;
  int jobs = 1;
};

struct CampaignReport {
  int instances = 0;
  int sat = 0;
  int verified = 0;
  int oracle_checked = 0;
  int oracle_agreed = 0;
  nlohmann::json failures = nlohmann::json::array();

  bool passed() const {
    return sat == instances && verified == instances && oracle_agreed == oracle_checked;
  }
};

// Seeded random regular graphs through solve_regular and the verifier.
CampaignReport regular_campaign(const CampaignConfig& config);

nlohmann::json to_json(const CampaignReport& r);

}  // namespace antifactor::cli
