#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgb/linear_code.hpp"

namespace sgb {

struct CheckResult {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
  bool informational = false;  // reported but never fails the suite
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  [[nodiscard]] bool all_passed() const;
};

struct SuiteOptions {
  std::string fixture_dir;
  std::optional<std::string> only;  // restrict to one group
  std::uint64_t seed = 0x5eedc0de;
  unsigned random_codes = 25;
};

/// Check groups, in run order.
[[nodiscard]] const std::vector<std::string>& suite_groups();

/// Seeded random binary codes with n <= 10, k <= 5, d >= 3 and distinct nonzero columns.
[[nodiscard]] std::vector<LinearCode> random_test_codes(std::uint64_t seed, unsigned count);

/// FNV-1a 64 over a file's bytes.
[[nodiscard]] std::uint64_t file_checksum(const std::string& path);

/// Runs the fixture verification suite. Throws Error(missing_file) when a fixture is absent.
[[nodiscard]] SuiteReport run_fixture_suite(const SuiteOptions& options);

}  // namespace sgb
