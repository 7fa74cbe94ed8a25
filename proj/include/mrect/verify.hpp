#pragma once

#include <string>
#include <vector>

#include "mrect/io.hpp"

namespace mrect {

struct Check {
  std::string claim;  // "AC<k>.<what>[n=..]", traceable to an acceptance criterion
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct RunReport {
  std::string command;
  io::Json inputs = io::Json::object();
  io::Json results = io::Json::object();
  std::vector<Check> checks;

  bool all_passed() const;
  io::Json to_json() const;
};

// Claim families, one per acceptance criterion, in criterion order.
const std::vector<std::string>& claim_families();

struct SuiteOptions {
  int n_min = 1;
  int n_max = 3;
  std::vector<std::string> only;  // empty = every family
};

// Runs the selected families for n in [n_min, n_max]. A family whose stated
// range is narrower than the request only runs inside its range; requests
// past a resource bound (face poset n > 4, dual graph n > 5) are refused with
// ResourceLimitError before anything runs.
RunReport run_verification(const SuiteOptions& options);

}  // namespace mrect
