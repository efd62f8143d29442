#include "qdio/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdio {

SolutionSet brute_force_solutions(std::uint32_t bits, std::uint64_t target) {
  if (bits == 0 || bits > 31) throw std::invalid_argument("bits must be in 1..31");
  SolutionSet set;
  set.bits = bits;
  set.target = target;
  const std::uint64_t limit = std::uint64_t{1} << bits;
  for (std::uint64_t x = 0; x < limit; ++x) {
    for (std::uint64_t y = 0; y < limit; ++y) {
      if (x + y == target) set.pairs.emplace_back(x, y);
    }
  }
  return set;
}

std::uint64_t solution_count_closed_form(std::uint32_t bits, std::uint64_t target) {
  if (bits == 0 || bits > 31) throw std::invalid_argument("bits must be in 1..31");
  const std::uint64_t top = (std::uint64_t{1} << bits) - 1;
  if (target > 2 * top) return 0;
  const std::uint64_t lowest_x = target > top ? target - top : 0;
  const std::uint64_t highest_x = std::min(target, top);
  return highest_x - lowest_x + 1;
}

double predicted_success(std::uint64_t space_size, std::uint64_t solutions,
                         std::uint32_t iterations) {
  if (solutions == 0 || solutions > space_size) {
    throw std::domain_error("solution count must be in 1..space_size (got " +
                            std::to_string(solutions) + " of " + std::to_string(space_size) + ")");
  }
  const double ratio = static_cast<double>(solutions) / static_cast<double>(space_size);
  if (iterations == 0) return ratio;  // exact; sin(asin(x)) would round
  const double theta = std::asin(std::sqrt(ratio));
  const double amplitude = std::sin((2.0 * iterations + 1.0) * theta);
  return amplitude * amplitude;
}

std::uint32_t optimal_iterations(std::uint64_t space_size, std::uint64_t solutions) {
  if (solutions == 0 || 2 * solutions >= space_size) {
    throw std::domain_error("iteration schedule needs 0 < M < N/2 (got M = " +
                            std::to_string(solutions) + ", N = " + std::to_string(space_size) + ")");
  }
  const double raw = (std::numbers::pi / 4.0) *
                     std::sqrt(static_cast<double>(space_size) / static_cast<double>(solutions));
  const auto floored = static_cast<std::uint32_t>(raw);
  return floored < 1 ? 1 : floored;
}

}  // namespace qdio
