#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coulomb::kostant {

struct PropertyTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> first_counterexample;
};

struct SuiteReport {
  int n = 1;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyTally> properties;

  bool all_passed() const;
};

/// Runs every orthosymplectic property on `samples` seeded samples. Sample i
/// draws from its own engine seeded by (seed, i), so the report is the same
/// for every thread count.
SuiteReport run_kostant_suite(int n, std::size_t samples, std::uint64_t seed, unsigned threads = 1);

}  // namespace coulomb::kostant
