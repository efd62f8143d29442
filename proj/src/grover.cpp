#include "qdio/grover.hpp"

#include <stdexcept>

#include "qdio/analysis.hpp"
#include "qdio/errors.hpp"

namespace qdio {

Circuit build_initializer(const RegisterLayout& layout) {
  validate_layout(layout);
  Circuit circuit(layout.total_width());
  for (std::uint32_t q : layout.x_qubits) circuit.h(q);
  for (std::uint32_t q : layout.y_qubits) circuit.h(q);
  circuit.x(layout.oracle_qubit);
  circuit.h(layout.oracle_qubit);
  return circuit;
}

Circuit build_query(const RegisterLayout& layout, std::uint64_t target) {
  validate_layout(layout);
  const std::uint32_t sum_bits = layout.m + 1;
  if (target >> sum_bits) {
    throw std::invalid_argument("target " + std::to_string(target) +
                                " does not fit in the " + std::to_string(sum_bits) +
                                "-bit sum register");
  }
  Circuit circuit(layout.total_width());
  // Map the sum register onto |target| so the all-ones control fires exactly
  // there; the trailing X gates undo the mapping in mirror order.
  auto target_bit = [&](std::uint32_t i) { return (target >> (layout.m - i)) & 1; };
  for (std::uint32_t i = 0; i < sum_bits; ++i) {
    if (!target_bit(i)) circuit.x(layout.sum_qubits[i]);
  }
  circuit.controlled_x(layout.sum_qubits, layout.oracle_qubit);
  for (std::uint32_t i = sum_bits; i-- > 0;) {
    if (!target_bit(i)) circuit.x(layout.sum_qubits[i]);
  }
  return circuit;
}

Circuit build_oracle(const RegisterLayout& layout, std::uint64_t target) {
  const Circuit adder = build_adder(layout);
  Circuit oracle = adder;
  oracle.append(build_query(layout, target));
  oracle.append(adjoint(adder));
  return oracle;
}

Circuit build_diffuser(const RegisterLayout& layout) {
  validate_layout(layout);
  const std::vector<std::uint32_t> index = layout.index_qubits();
  Circuit circuit(layout.total_width());
  for (std::uint32_t q : index) circuit.h(q);
  for (std::uint32_t q : index) circuit.x(q);
  circuit.controlled_x(index, layout.oracle_qubit);
  for (std::uint32_t q : index) circuit.x(q);
  for (std::uint32_t q : index) circuit.h(q);
  return circuit;
}

Circuit build_grover_circuit(const RegisterLayout& layout, std::uint64_t target,
                             std::uint32_t iterations) {
  Circuit circuit = build_initializer(layout);
  const Circuit oracle = build_oracle(layout, target);
  const Circuit diffuser = build_diffuser(layout);
  for (std::uint32_t k = 0; k < iterations; ++k) {
    circuit.append(oracle);
    circuit.append(diffuser);
  }
  return circuit;
}

GroverReport run_grover(std::uint32_t bits, std::uint64_t target, const GroverOptions& options) {
  const RegisterLayout layout = build_layout(bits);
  // fail the width guard before the 2^(2m) classical scan
  StateVector::check_width(layout.total_width(), options.max_width);
  const SolutionSet solutions = brute_force_solutions(bits, target);
  const std::uint64_t space_size = std::uint64_t{1} << (2 * bits);
  const std::uint64_t solution_count = solutions.count();

  GroverReport report;
  report.problem = SearchProblem{bits, target, space_size, solution_count};
  report.shots = options.shots;
  report.seed = options.seed;
  for (const auto& [x, y] : solutions.pairs) {
    report.solutions.push_back(SolutionRow{encode_bits(x, bits) + encode_bits(y, bits), x, y});
  }

  if (solution_count == 0) {
    // Nothing to amplify; report the empty result instead of running.
    return report;
  }
  if (2 * solution_count >= space_size && !options.force) {
    throw DiffuserConditionError(
        "solutions fill at least half the search space (M = " + std::to_string(solution_count) +
        ", N = " + std::to_string(space_size) +
        "), so the diffuser cannot amplify them; pass force to run anyway");
  }

  const std::uint32_t iterations =
      options.iterations.has_value() ? *options.iterations
      : 2 * solution_count < space_size ? optimal_iterations(space_size, solution_count)
                                        : 1;  // forced majority case: the schedule floors to 1
  report.iterations = iterations;
  report.predicted_success = predicted_success(space_size, solution_count, iterations);

  StateVector state(layout.total_width(), options.max_width);
  state.apply(build_initializer(layout));
  const Circuit oracle = build_oracle(layout, target);
  const Circuit diffuser = build_diffuser(layout);
  for (std::uint32_t k = 0; k < iterations; ++k) {
    state.apply(oracle);
    state.apply(diffuser);
  }

  const std::vector<std::uint32_t> index = layout.index_qubits();
  if (options.shots > 0) {
    const auto counts = state.sample(index, options.shots, options.seed);
    for (const auto& [key, count] : counts) {
      report.histogram.emplace(key, static_cast<double>(count) / static_cast<double>(options.shots));
    }
  } else {
    report.histogram = state.marginal_probabilities(index);
  }

  double success = 0.0;
  for (const SolutionRow& row : report.solutions) {
    auto it = report.histogram.find(row.state);
    if (it != report.histogram.end()) success += it->second;
  }
  report.success_probability = success;
  return report;
}

}  // namespace qdio
