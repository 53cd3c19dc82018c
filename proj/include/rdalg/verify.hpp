#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rdalg {

struct CheckLine {
  std::string id;
  std::uint64_t n = 0;
  bool pass = true;
  std::string detail;  // first differing term or error text on failure
};

struct VerifyOptions {
  std::string suite = "all";
  // Overrides every check's default bound, clamped to that check's cap.
  std::optional<unsigned> bound;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckLine> lines;

  bool all_pass() const noexcept;
  std::size_t failures() const noexcept;
  /// "PASS|FAIL <id> n=<n>" per line; failures append " -- <detail>".
  std::string text() const;
  /// {"suite":..,"total":..,"passed":..,"failed":..,"failures":[...]}
  std::string json_summary() const;
};

/// pow, log, thm1, thm2, thm3, abel, binomf, oracle.
const std::vector<std::string>& suite_names();

/// Runs one suite or "all". Lines come out in a fixed order whatever the
/// number of jobs. Throws InvalidArgument for an unknown suite.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace rdalg
