#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qdio/circuit.hpp"
#include "qdio/statevector.hpp"

namespace qdio {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct VerifyOptions {
  bool force = false;
  std::uint32_t max_width = StateVector::default_max_width;
  /// Test hook: rewrites the oracle before the checks that consume it.
  /// A corrupted oracle must make the sign check fail.
  std::function<Circuit(const Circuit&)> oracle_transform;
};

/// Runs the invariant suite at the given size: exhaustive adder check,
/// structural gate counts, oracle sign check against the brute-force
/// enumeration, work-register uncomputation and closed-form agreement.
/// Checks that need a condition the instance lacks (e.g. 0 < M < N/2) are
/// reported as skipped, not failed.
std::vector<CheckResult> run_verification(std::uint32_t bits, std::uint64_t target,
                                          const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qdio
