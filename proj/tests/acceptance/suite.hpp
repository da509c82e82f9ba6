#pragma once

#include <cstdint>
#include <string>

namespace quatinv::selftest {

inline constexpr int kCriterionCount = 11;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string message;  // on failure: the violated invariant and a witness
  double seconds = 0;
};

// Runs one criterion (1..11); exceptions become failures.
CriterionResult run_criterion(int id, std::uint64_t seed);

std::string format_line(const CriterionResult& r, bool timing);

}  // namespace quatinv::selftest
