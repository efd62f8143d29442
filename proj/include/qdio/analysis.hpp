#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qdio {

/// All (x, y) with x + y = target and 0 <= x, y < 2^bits, sorted by x.
struct SolutionSet {
  std::uint32_t bits = 0;
  std::uint64_t target = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;

  std::uint64_t count() const { return pairs.size(); }
};

/// Exhaustive scan of all 2^(2*bits) candidate pairs. This is the classical
/// oracle the quantum results are checked against, so it stays a plain
/// enumeration on purpose.
SolutionSet brute_force_solutions(std::uint32_t bits, std::uint64_t target);

/// min(n, 2^m-1) - max(0, n - (2^m-1)) + 1 inside the representable range,
/// 0 outside. Cross-checks the enumeration without sharing code with it.
std::uint64_t solution_count_closed_form(std::uint32_t bits, std::uint64_t target);

/// Success probability after `iterations` amplification rounds:
/// sin^2((2k+1) * asin(sqrt(M/N))). Exactly M/N for k = 0.
/// Throws std::domain_error when solutions is 0 or exceeds space_size.
double predicted_success(std::uint64_t space_size, std::uint64_t solutions,
                         std::uint32_t iterations);

/// floor((pi/4) * sqrt(N/M)), at least 1. Requires 0 < M < N/2.
std::uint32_t optimal_iterations(std::uint64_t space_size, std::uint64_t solutions);

}  // namespace qdio
