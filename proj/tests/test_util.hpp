#pragma once

// Test-only reference implementations, deliberately independent of the
// library's sweep kernels: gates are applied by distributing basis-state
// contributions, and X-family circuits by permuting one classical index.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdio/circuit.hpp"
#include "qdio/statevector.hpp"

namespace test_util {

// Where an X/CX/CCX/MCX gate sends one basis index.
inline std::uint64_t permute_basis(const qdio::Gate& gate, std::uint64_t basis) {
  if (gate.kind == qdio::GateKind::H) {
    throw std::invalid_argument("Hadamard is not a basis permutation");
  }
  bool controls_set = true;
  for (std::uint32_t c : gate.controls) {
    if (((basis >> c) & 1) == 0) controls_set = false;
  }
  return controls_set ? basis ^ (std::uint64_t{1} << gate.target) : basis;
}

// Runs an X-family circuit as a classical reversible program on one index.
inline std::uint64_t classical_apply(const qdio::Circuit& circuit, std::uint64_t basis) {
  for (const qdio::Gate& g : circuit.gates()) basis = permute_basis(g, basis);
  return basis;
}

// Applies one gate by scattering each input amplitude to its outputs.
inline std::vector<std::complex<double>> reference_apply(
    const qdio::Gate& gate, const std::vector<std::complex<double>>& amplitudes) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<std::complex<double>> out(amplitudes.size(), {0.0, 0.0});
  for (std::uint64_t b = 0; b < amplitudes.size(); ++b) {
    const std::complex<double> a = amplitudes[b];
    if (a == std::complex<double>{0.0, 0.0}) continue;
    if (gate.kind == qdio::GateKind::H) {
      const std::uint64_t mask = std::uint64_t{1} << gate.target;
      if ((b & mask) == 0) {
        out[b] += a * inv_sqrt2;
        out[b | mask] += a * inv_sqrt2;
      } else {
        out[b & ~mask] += a * inv_sqrt2;
        out[b] -= a * inv_sqrt2;
      }
    } else {
      out[permute_basis(gate, b)] += a;
    }
  }
  return out;
}

inline qdio::StateVector random_state(std::uint32_t width, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> amplitudes(std::uint64_t{1} << width);
  double norm = 0.0;
  for (auto& a : amplitudes) {
    a = {gauss(rng), gauss(rng)};
    norm += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : amplitudes) a *= scale;
  return qdio::StateVector::from_amplitudes(std::move(amplitudes));
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

// Runs a shell command, capturing stdout; stderr is left alone.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace test_util
