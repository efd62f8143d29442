#include "qdio/verify.hpp"

#include <cmath>
#include <complex>
#include <set>

#include "qdio/adder.hpp"
#include "qdio/analysis.hpp"
#include "qdio/grover.hpp"

namespace qdio {

namespace {

// Basis index for |x, y, carries, sum, oracle=0> with the ripple carries and
// the sum computed classically, independent of the circuit.
std::uint64_t expected_adder_index(const RegisterLayout& layout, std::uint64_t x, std::uint64_t y) {
  const std::uint32_t m = layout.m;
  std::uint64_t index = 0;
  auto set_bit = [&](std::uint32_t qubit, std::uint64_t bit) { index |= bit << qubit; };

  for (std::uint32_t i = 0; i < m; ++i) {
    set_bit(layout.x_qubits[i], (x >> (m - 1 - i)) & 1);
    set_bit(layout.y_qubits[i], (y >> (m - 1 - i)) & 1);
  }
  std::uint64_t carry = 0;
  for (std::uint32_t t = 0; t < m; ++t) {
    const std::uint64_t xb = (x >> t) & 1, yb = (y >> t) & 1;
    carry = (xb & yb) | (xb & carry) | (yb & carry);
    if (t + 1 < m) set_bit(layout.carry_qubits[t], carry);
  }
  const std::uint64_t sum = x + y;
  for (std::uint32_t i = 0; i <= m; ++i) {
    set_bit(layout.sum_qubits[i], (sum >> (m - i)) & 1);
  }
  return index;
}

// Index-register basis value placed on the layout's qubits.
std::uint64_t index_basis(const RegisterLayout& layout, std::uint64_t x, std::uint64_t y) {
  const std::uint32_t m = layout.m;
  std::uint64_t index = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    index |= ((x >> (m - 1 - i)) & 1) << layout.x_qubits[i];
    index |= ((y >> (m - 1 - i)) & 1) << layout.y_qubits[i];
  }
  return index;
}

bool is_exact_basis_state(const StateVector& state, std::uint64_t index) {
  for (std::uint64_t b = 0; b < state.size(); ++b) {
    const std::complex<double> expected = b == index ? std::complex<double>{1.0, 0.0}
                                                     : std::complex<double>{0.0, 0.0};
    if (state.amplitude(b) != expected) return false;
  }
  return true;
}

CheckResult check_adder_exhaustive(const RegisterLayout& layout, const Circuit& adder,
                                   std::uint32_t max_width) {
  const std::uint64_t limit = std::uint64_t{1} << layout.m;
  for (std::uint64_t x = 0; x < limit; ++x) {
    for (std::uint64_t y = 0; y < limit; ++y) {
      StateVector state =
          StateVector::basis_state(layout.total_width(), index_basis(layout, x, y), max_width);
      state.apply(adder);
      if (!is_exact_basis_state(state, expected_adder_index(layout, x, y))) {
        return {"adder-exhaustive", false, false,
                "wrong output for x = " + std::to_string(x) + ", y = " + std::to_string(y)};
      }
    }
  }
  return {"adder-exhaustive", true, false,
          std::to_string(limit * limit) + " basis inputs add correctly with inputs preserved"};
}

CheckResult check_adder_gate_counts(const RegisterLayout& layout, const Circuit& adder) {
  const GateCounts counts = gate_counts(adder);
  const std::uint64_t want_cx = 3 * layout.m - 1, want_ccx = 3 * layout.m - 2;
  if (counts.cx != want_cx || counts.ccx != want_ccx || counts.h + counts.x + counts.mcx != 0) {
    return {"adder-gate-count", false, false,
            "got " + std::to_string(counts.cx) + " CX and " + std::to_string(counts.ccx) +
                " CCX, want " + std::to_string(want_cx) + " and " + std::to_string(want_ccx)};
  }
  return {"adder-gate-count", true, false,
          std::to_string(want_cx) + " CX + " + std::to_string(want_ccx) + " CCX as expected"};
}

CheckResult check_adder_preserves_inputs(const RegisterLayout& layout, const Circuit& adder) {
  std::set<std::uint32_t> inputs(layout.x_qubits.begin(), layout.x_qubits.end());
  inputs.insert(layout.y_qubits.begin(), layout.y_qubits.end());
  for (const Gate& g : adder.gates()) {
    if (inputs.count(g.target)) {
      return {"adder-preserves-inputs", false, false,
              "a gate targets input qubit " + std::to_string(g.target)};
    }
  }
  return {"adder-preserves-inputs", true, false, "no gate targets the x or y registers"};
}

CheckResult check_oracle_sign(const RegisterLayout& layout, const Circuit& oracle,
                              std::uint64_t target, std::uint32_t max_width) {
  const std::uint32_t m = layout.m;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t x = 0; x < limit; ++x) {
    for (std::uint64_t y = 0; y < limit; ++y) {
      StateVector state =
          StateVector::basis_state(layout.total_width(), index_basis(layout, x, y), max_width);
      state.apply(Gate::x(layout.oracle_qubit));
      state.apply(Gate::h(layout.oracle_qubit));
      const std::vector<std::complex<double>> before(state.amplitudes().begin(),
                                                     state.amplitudes().end());
      state.apply(oracle);
      const double sign = (x + y == target) ? -1.0 : 1.0;
      for (std::uint64_t b = 0; b < state.size(); ++b) {
        if (state.amplitude(b) != sign * before[b]) {
          return {"oracle-sign", false, false,
                  "phase wrong for x = " + std::to_string(x) + ", y = " + std::to_string(y)};
        }
      }
    }
  }
  return {"oracle-sign", true, false,
          "all " + std::to_string(limit * limit) + " index states get phase (-1)^[x+y=target]"};
}

CheckResult check_uncomputation(const RegisterLayout& layout, const Circuit& oracle,
                                std::uint32_t max_width) {
  const Circuit diffuser = build_diffuser(layout);
  StateVector state(layout.total_width(), max_width);
  state.apply(build_initializer(layout));
  const std::vector<std::uint32_t> work = layout.work_qubits();
  const std::vector<std::uint32_t> oracle_qubit{layout.oracle_qubit};
  for (std::uint32_t iteration = 1; iteration <= 3; ++iteration) {
    state.apply(oracle);
    state.apply(diffuser);
    const std::vector<double> work_marginal = state.marginal(work);
    if (std::abs(work_marginal[0] - 1.0) > 1e-10) {
      return {"work-uncomputation", false, false,
              "work registers not all zero after iteration " + std::to_string(iteration)};
    }
    const std::vector<double> oracle_marginal = state.marginal(oracle_qubit);
    if (std::abs(oracle_marginal[0] - 0.5) > 1e-10 || std::abs(oracle_marginal[1] - 0.5) > 1e-10) {
      return {"work-uncomputation", false, false,
              "oracle qubit left |-> after iteration " + std::to_string(iteration)};
    }
  }
  return {"work-uncomputation", true, false,
          "work registers return to zero and the oracle qubit stays in |-> for 3 iterations"};
}

CheckResult check_closed_form(const RegisterLayout& layout, const Circuit& oracle,
                              const SolutionSet& solutions, std::uint32_t max_width) {
  const std::uint64_t space_size = std::uint64_t{1} << (2 * layout.m);
  const Circuit diffuser = build_diffuser(layout);
  StateVector state(layout.total_width(), max_width);
  state.apply(build_initializer(layout));
  const std::vector<std::uint32_t> index = layout.index_qubits();

  for (std::uint32_t k = 0; k <= 8; ++k) {
    if (k > 0) {
      state.apply(oracle);
      state.apply(diffuser);
    }
    const std::vector<double> marginal = state.marginal(index);
    double success = 0.0;
    for (const auto& [x, y] : solutions.pairs) {
      std::uint64_t key = 0;
      for (std::uint32_t i = 0; i < layout.m; ++i) key = (key << 1) | ((x >> (layout.m - 1 - i)) & 1);
      for (std::uint32_t i = 0; i < layout.m; ++i) key = (key << 1) | ((y >> (layout.m - 1 - i)) & 1);
      success += marginal[key];
    }
    const double predicted = predicted_success(space_size, solutions.count(), k);
    if (std::abs(success - predicted) > 1e-9) {
      return {"closed-form-agreement", false, false,
              "simulated " + std::to_string(success) + " vs predicted " +
                  std::to_string(predicted) + " at k = " + std::to_string(k)};
    }
  }
  return {"closed-form-agreement", true, false,
          "simulated success matches sin^2((2k+1) asin(sqrt(M/N))) for k <= 8"};
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint32_t bits, std::uint64_t target,
                                          const VerifyOptions& options) {
  const RegisterLayout layout = build_layout(bits);
  StateVector::check_width(layout.total_width(), options.max_width);
  const Circuit adder = build_adder(layout);
  Circuit oracle = build_oracle(layout, target);
  if (options.oracle_transform) oracle = options.oracle_transform(oracle);

  const SolutionSet solutions = brute_force_solutions(bits, target);
  const std::uint64_t space_size = std::uint64_t{1} << (2 * bits);
  const std::uint64_t solution_count = solutions.count();

  std::vector<CheckResult> results;
  results.push_back(check_adder_exhaustive(layout, adder, options.max_width));
  results.push_back(check_adder_gate_counts(layout, adder));
  results.push_back(check_adder_preserves_inputs(layout, adder));
  results.push_back(check_oracle_sign(layout, oracle, target, options.max_width));

  const bool majority = 2 * solution_count >= space_size;
  if (solution_count == 0) {
    results.push_back({"work-uncomputation", true, true, "skipped: the target has no solutions"});
    results.push_back({"closed-form-agreement", true, true, "skipped: the target has no solutions"});
  } else if (majority && !options.force) {
    const std::string why = "skipped: M >= N/2 (M = " + std::to_string(solution_count) +
                            ", N = " + std::to_string(space_size) + "); pass force to run";
    results.push_back({"work-uncomputation", true, true, why});
    results.push_back({"closed-form-agreement", true, true, why});
  } else {
    results.push_back(check_uncomputation(layout, oracle, options.max_width));
    results.push_back(check_closed_form(layout, oracle, solutions, options.max_width));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace qdio
