#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qdio/circuit.hpp"

namespace qdio {

/// Dense statevector over `width` qubits: 2^width complex amplitudes with
/// in-place gate application.
///
/// Basis convention: bit q of a basis index is the value of qubit q, i.e.
/// basis index b assigns qubit q the bit (b >> q) & 1. Display strings are a
/// separate concern: marginal_probabilities takes an ordered qubit list and
/// prints the first listed qubit leftmost.
///
/// Gates sweep amplitude pairs selected by the target-bit mask; controlled
/// gates filter pairs by a control mask. No gate matrix is ever built. Large
/// sweeps are split across threads over disjoint index ranges, which is
/// bitwise identical to the serial sweep (no cross-thread arithmetic).
class StateVector {
 public:
  /// Widest state allowed unless the guard is raised (2^30 amplitudes, 16 GiB).
  static constexpr std::uint32_t default_max_width = 30;

  /// |0...0>. Throws CapacityError when width is zero or above max_width.
  explicit StateVector(std::uint32_t width, std::uint32_t max_width = default_max_width);

  /// The constructor's width guard, usable before committing to the allocation.
  static void check_width(std::uint32_t width, std::uint32_t max_width = default_max_width);

  /// A computational basis state.
  static StateVector basis_state(std::uint32_t width, std::uint64_t index,
                                 std::uint32_t max_width = default_max_width);

  /// Adopts explicit amplitudes. The length must be a power of two and the
  /// norm must already be 1 within 1e-10; nothing is renormalized.
  static StateVector from_amplitudes(std::vector<std::complex<double>> amplitudes);

  std::uint32_t width() const { return width_; }
  std::uint64_t size() const { return amplitudes_.size(); }
  std::complex<double> amplitude(std::uint64_t basis) const { return amplitudes_.at(basis); }
  std::span<const std::complex<double>> amplitudes() const { return amplitudes_; }

  void apply(const Gate& gate);

  /// Applies every gate in order. The circuit may be narrower than the state.
  void apply(const Circuit& circuit);

  /// Sum of |amplitude|^2 (1 up to rounding for any state built here).
  double norm_squared() const;

  /// Probability of each bit pattern over the listed qubits, as a vector
  /// indexed with the first listed qubit as the most significant bit.
  std::vector<double> marginal(std::span<const std::uint32_t> qubits) const;

  /// Same, keyed by bitstring in display order (first listed qubit leftmost).
  /// Values sum to 1 within rounding.
  std::map<std::string, double> marginal_probabilities(std::span<const std::uint32_t> qubits) const;

  /// Multinomial draw of `shots` outcomes from the marginal distribution.
  /// Only observed bitstrings appear. Identical (state, qubits, shots, seed)
  /// give identical counts, independent of platform and thread count.
  std::map<std::string, std::uint64_t> sample(std::span<const std::uint32_t> qubits,
                                              std::uint64_t shots, std::uint64_t seed) const;

  /// Caps worker threads for gate sweeps (0 = hardware concurrency).
  /// Results never depend on this; it is a throughput knob only.
  static void set_max_threads(unsigned count);

 private:
  StateVector() = default;

  void apply_hadamard(std::uint64_t target_mask);
  void apply_controlled_x(std::uint64_t control_mask, std::uint64_t target_mask);

  std::uint32_t width_ = 0;
  std::vector<std::complex<double>> amplitudes_;
};

}  // namespace qdio
