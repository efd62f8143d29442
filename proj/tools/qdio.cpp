#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qdio/adder.hpp"
#include "qdio/errors.hpp"
#include "qdio/grover.hpp"
#include "qdio/report_io.hpp"
#include "qdio/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoSolutions = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerifyFailed = 4;

struct CommonConfig {
  std::uint32_t bits = 0;
  std::uint64_t target = 0;
  std::uint32_t max_width = qdio::StateVector::default_max_width;
  bool force = false;
};

struct RunConfig : CommonConfig {
  std::string iterations = "auto";
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::uint64_t top = 0;
  std::string export_path;
};

void add_common_options(CLI::App& cmd, CommonConfig& config) {
  cmd.add_option("--bits", config.bits, "Bits per variable (m)")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--target", config.target, "Target sum n of x + y = n")->required();
  cmd.add_option("--max-width", config.max_width,
                 "Widest simulable state in qubits (memory guard)")
      ->envname("QDIO_MAX_WIDTH")
      ->check(CLI::PositiveNumber);
  cmd.add_flag("--force", config.force, "Run even when solutions fill at least half the space");
}

std::optional<std::uint32_t> parse_iterations(const std::string& text) {
  if (text == "auto") return std::nullopt;
  const bool digits_only =
      !text.empty() && text.find_first_not_of("0123456789") == std::string::npos;
  unsigned long long value = 0;
  if (digits_only) {
    try {
      value = std::stoull(text);
    } catch (const std::out_of_range&) {
      value = std::numeric_limits<unsigned long long>::max();
    }
  }
  if (!digits_only || value > UINT32_MAX) {
    throw std::invalid_argument("--iterations expects a nonnegative integer or 'auto', got '" +
                                text + "'");
  }
  return static_cast<std::uint32_t>(value);
}

int run_command(const RunConfig& config) {
  qdio::GroverOptions options;
  options.iterations = parse_iterations(config.iterations);
  options.shots = config.shots;
  options.seed = config.seed;
  options.force = config.force;
  options.max_width = config.max_width;

  const qdio::GroverReport report = qdio::run_grover(config.bits, config.target, options);
  if (report.problem.solution_count == 0) {
    std::cerr << "no solutions exist: x + y = " << config.target << " has no solution with 0 <= x, y < "
              << (std::uint64_t{1} << config.bits) << "\n";
    return kExitNoSolutions;
  }

  if (!config.export_path.empty()) {
    const qdio::RegisterLayout layout = qdio::build_layout(config.bits);
    const qdio::Circuit circuit =
        qdio::build_grover_circuit(layout, config.target, report.iterations);
    std::ofstream out(config.export_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + config.export_path + "' for writing");
    out << qdio::export_text(circuit, qdio::register_naming(layout));
    if (!out) throw std::runtime_error("failed writing '" + config.export_path + "'");
  }

  std::cout << (config.format == "csv" ? qdio::to_csv(report, config.top)
                                       : qdio::to_json(report, config.top));
  return kExitOk;
}

int verify_command(const CommonConfig& config) {
  qdio::VerifyOptions options;
  options.force = config.force;
  options.max_width = config.max_width;
  const auto results = qdio::run_verification(config.bits, config.target, options);
  for (const qdio::CheckResult& r : results) {
    const char* tag = r.skipped ? "[SKIP]" : r.passed ? "[PASS]" : "[FAIL]";
    std::cout << tag << " " << r.name << ": " << r.detail << "\n";
  }
  return qdio::all_passed(results) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover search for integer solutions of x + y = n"};
  app.require_subcommand(1);

  RunConfig run_config;
  CLI::App* run = app.add_subcommand("run", "Run the search and print a report");
  add_common_options(*run, run_config);
  run->add_option("--iterations", run_config.iterations,
                  "Grover iterations: a count, or 'auto' for floor((pi/4) sqrt(N/M))");
  run->add_option("--shots", run_config.shots,
                  "Sample this many measurements instead of exact probabilities");
  run->add_option("--seed", run_config.seed, "Seed for sampling");
  run->add_option("--format", run_config.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  run->add_option("--top", run_config.top, "Keep only the most probable entries (0 = all)");
  run->add_option("--export-circuit", run_config.export_path,
                  "Write the full circuit as OpenQASM 3 to this path");

  CommonConfig verify_config;
  CLI::App* verify = app.add_subcommand("verify", "Run the invariant checks at this size");
  add_common_options(*verify, verify_config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return run_command(run_config);
    if (verify->parsed()) return verify_command(verify_config);
    std::cerr << "expected a subcommand: run or verify\n";
    return kExitUsage;
  } catch (const qdio::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const qdio::DiffuserConditionError& e) {
    std::cerr << "error: " << e.what() << " (--force)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
