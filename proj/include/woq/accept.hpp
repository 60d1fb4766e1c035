#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace woq {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the acceptance criteria. suite: "all", "lattice", "hopf" or "fan".
// Deterministic given (seed); threads parallelize the big scans.
std::vector<CriterionResult> run_acceptance(const std::string& suite, int threads,
                                            uint64_t seed);

}  // namespace woq
