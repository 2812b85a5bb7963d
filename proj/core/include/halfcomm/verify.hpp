#pragma once

// Named verification suites. Each check carries a descriptive anchor naming the
// statement it exercises; reports are printed as JSON lines sorted by check id.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace halfcomm {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyParams {
  int n = 2;
  int k = 1;
  std::size_t maxlen = 5;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 1000;
  int p_max = 5;
  std::size_t degree_cap = 8;
  /// Fusion suite only.
  std::string group = "un:2";
  int cap = 3;
  int triples = 50;
};

struct CheckResult {
  std::string suite;
  std::string id;
  std::string anchor;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// 0 when every check passed, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }
  std::string to_json_lines() const;
};

std::vector<std::string> verify_suites();

/// Throws UsageError for an unknown suite. A check that hits a resource cap is
/// reported as failed; the remaining checks still run.
VerifyReport run_verify(const std::string& suite, const VerifyParams& params);

} // namespace halfcomm
