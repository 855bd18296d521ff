#pragma once

// Exhaustive invariant sweeps over small weights, driven by `ncsym verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace ncsym::verify {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // "<case>: <what went wrong>"

  bool passed() const { return failures.empty(); }
};

struct Options {
  int maxWeight = 4;
  /// Empty means every check.
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  /// Random partitions per weight above the exhaustive limit.
  int spotChecks = 4;
};

/// Weights up to this bound are swept exhaustively; higher ones are sampled.
inline constexpr int kExhaustiveWeight = 5;

/// Names accepted in Options::checks, in run order.
const std::vector<std::string>& checkNames();

/// Throws std::invalid_argument on an unknown check name.
std::vector<CheckResult> run(const Options& options);

}  // namespace ncsym::verify
