#include "qdio/report_io.hpp"

#include <algorithm>
#include <cstdio>

#include "qdio/adder.hpp"

namespace qdio {

namespace {

std::string probability_string(double p) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  return buf;
}

struct TruncatedHistogram {
  std::vector<std::pair<std::string, double>> entries;
  double truncated_mass = 0.0;
  bool truncated = false;
};

TruncatedHistogram truncate(const GroverReport& report, std::uint64_t top_k) {
  TruncatedHistogram result;
  result.entries = sorted_histogram(report.histogram);
  if (top_k > 0 && top_k < result.entries.size()) {
    for (std::size_t i = top_k; i < result.entries.size(); ++i) {
      result.truncated_mass += result.entries[i].second;
    }
    result.entries.resize(top_k);
    result.truncated = true;
  }
  return result;
}

}  // namespace

std::vector<std::pair<std::string, double>> sorted_histogram(
    const std::map<std::string, double>& histogram) {
  std::vector<std::pair<std::string, double>> entries(histogram.begin(), histogram.end());
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return entries;
}

std::string to_json(const GroverReport& report, std::uint64_t top_k) {
  const TruncatedHistogram histogram = truncate(report, top_k);
  const std::uint32_t bits = report.problem.bits;

  std::string out = "{\n";
  out += "  \"schema_version\": 1,\n";
  out += "  \"bits\": " + std::to_string(bits) + ",\n";
  out += "  \"target\": " + std::to_string(report.problem.target) + ",\n";
  out += "  \"iterations\": " + std::to_string(report.iterations) + ",\n";
  out += "  \"space_size\": " + std::to_string(report.problem.space_size) + ",\n";
  out += "  \"solution_count\": " + std::to_string(report.problem.solution_count) + ",\n";
  out += "  \"shots\": " + std::to_string(report.shots) + ",\n";
  out += "  \"seed\": " + std::to_string(report.seed) + ",\n";
  out += "  \"success_probability\": " + probability_string(report.success_probability) + ",\n";
  out += "  \"predicted_success\": " + probability_string(report.predicted_success) + ",\n";
  if (histogram.truncated) {
    out += "  \"truncated_mass\": " + probability_string(histogram.truncated_mass) + ",\n";
  }

  out += "  \"histogram\": [";
  for (std::size_t i = 0; i < histogram.entries.size(); ++i) {
    const auto& [state, probability] = histogram.entries[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"state\": \"" + state + "\"";
    out += ", \"x\": " + std::to_string(decode_bits(std::string_view(state).substr(0, bits)));
    out += ", \"y\": " + std::to_string(decode_bits(std::string_view(state).substr(bits)));
    out += ", \"probability\": " + probability_string(probability) + "}";
  }
  out += histogram.entries.empty() ? "],\n" : "\n  ],\n";

  out += "  \"solutions\": [";
  for (std::size_t i = 0; i < report.solutions.size(); ++i) {
    const SolutionRow& row = report.solutions[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"state\": \"" + row.state + "\"";
    out += ", \"x_base2\": \"" + encode_bits(row.x, bits) + "\"";
    out += ", \"y_base2\": \"" + encode_bits(row.y, bits) + "\"";
    out += ", \"x\": " + std::to_string(row.x);
    out += ", \"y\": " + std::to_string(row.y);
    out += ", \"sum\": " + std::to_string(row.x + row.y) + "}";
  }
  out += report.solutions.empty() ? "]\n" : "\n  ]\n";

  out += "}\n";
  return out;
}

std::string to_csv(const GroverReport& report, std::uint64_t top_k) {
  const TruncatedHistogram histogram = truncate(report, top_k);
  const std::uint32_t bits = report.problem.bits;

  std::string out = "state,x,y,probability\n";
  for (const auto& [state, probability] : histogram.entries) {
    out += state;
    out += "," + std::to_string(decode_bits(std::string_view(state).substr(0, bits)));
    out += "," + std::to_string(decode_bits(std::string_view(state).substr(bits)));
    out += "," + probability_string(probability) + "\n";
  }
  if (histogram.truncated) {
    out += "truncated_mass,,," + probability_string(histogram.truncated_mass) + "\n";
  }
  return out;
}

}  // namespace qdio
