#pragma once

#include "vpoly/bkk.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vpoly {

struct AcceptanceConfig {
  RootTolerances tol;
  std::uint64_t seed = 0;  // offsets every randomized criterion
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriteria = 12;

/// Runs one criterion (1..kCriteria). Throws Error(InvalidInput) on a bad id.
CriterionResult run_criterion(int id, const AcceptanceConfig& config = {});

/// All criteria, in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config = {});

/// One "PASS|FAIL  id  name  (seconds)  detail" line.
std::string format_result(const CriterionResult& r);

}  // namespace vpoly
