#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdio/adder.hpp"
#include "qdio/circuit.hpp"
#include "qdio/statevector.hpp"

namespace qdio {

struct SearchProblem {
  std::uint32_t bits = 0;           // m
  std::uint64_t target = 0;         // n
  std::uint64_t space_size = 0;     // N = 2^(2m)
  std::uint64_t solution_count = 0; // M

  friend bool operator==(const SearchProblem&, const SearchProblem&) = default;
};

struct SolutionRow {
  std::string state;  // x bits then y bits, display order
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend bool operator==(const SolutionRow&, const SolutionRow&) = default;
};

struct GroverReport {
  SearchProblem problem;
  std::uint32_t iterations = 0;
  std::uint64_t shots = 0;  // 0 = exact amplitudes
  std::uint64_t seed = 0;
  /// Probability (or sampled frequency) per index-register bitstring,
  /// keyed x0..x_{m-1} y0..y_{m-1} left to right.
  std::map<std::string, double> histogram;
  /// Sum of histogram values over the verified solutions.
  double success_probability = 0.0;
  /// Closed-form sin^2((2k+1) asin(sqrt(M/N))).
  double predicted_success = 0.0;
  std::vector<SolutionRow> solutions;
};

/// Hadamards on the 2m index qubits, then X and H putting the oracle qubit
/// in |->. Carry and sum qubits are untouched.
Circuit build_initializer(const RegisterLayout& layout);

/// Flips the oracle qubit exactly when the sum register holds `target`:
/// X on each sum qubit whose target bit is 0, a NOT controlled on the whole
/// sum register, and the mirrored X gates. Requires target < 2^(m+1).
Circuit build_query(const RegisterLayout& layout, std::uint64_t target);

/// adder, query, adjoint adder. With the oracle qubit in |-> this sends each
/// index basis state |x,y> to (-1)^[x+y=target] |x,y> and returns carries
/// and sum to zero.
Circuit build_oracle(const RegisterLayout& layout, std::uint64_t target);

/// Reflection about the uniform index state: H and X layers around a NOT
/// controlled on all 2m index qubits, targeting the oracle qubit.
Circuit build_diffuser(const RegisterLayout& layout);

/// Initializer followed by `iterations` oracle-diffuser rounds.
Circuit build_grover_circuit(const RegisterLayout& layout, std::uint64_t target,
                             std::uint32_t iterations);

struct GroverOptions {
  /// Amplification rounds; unset means floor((pi/4) sqrt(N/M)).
  std::optional<std::uint32_t> iterations;
  std::uint64_t shots = 0;  // 0 = exact probabilities
  std::uint64_t seed = 0;
  /// Run even when solutions fill at least half the space.
  bool force = false;
  std::uint32_t max_width = StateVector::default_max_width;
};

/// Runs the full search and verifies it: simulates the circuit, reads the
/// index-register distribution, checks every reported solution against the
/// classical enumeration and fills in the closed-form prediction.
///
/// A target with no solutions yields a well-formed empty report without
/// simulating. M >= N/2 throws DiffuserConditionError unless forced.
GroverReport run_grover(std::uint32_t bits, std::uint64_t target,
                        const GroverOptions& options = {});

}  // namespace qdio
