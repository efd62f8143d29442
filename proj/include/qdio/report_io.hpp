#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdio/grover.hpp"

namespace qdio {

/// Histogram entries sorted by descending probability, ties by ascending
/// bitstring.
std::vector<std::pair<std::string, double>> sorted_histogram(
    const std::map<std::string, double>& histogram);

/// Deterministic JSON serialization (schema_version 1). Probabilities carry
/// 12 significant digits. top_k > 0 keeps the top_k histogram entries and
/// reports the dropped mass in `truncated_mass`.
std::string to_json(const GroverReport& report, std::uint64_t top_k = 0);

/// CSV with header `state,x,y,probability`, same ordering and truncation
/// rules; dropped mass appears as a final `truncated_mass` row.
std::string to_csv(const GroverReport& report, std::uint64_t top_k = 0);

}  // namespace qdio
