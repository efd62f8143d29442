#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdio {

enum class GateKind { H, X, CX, CCX, MCX };

std::string_view gate_name(GateKind kind);

/// One primitive gate: a Hadamard, a NOT, or a NOT controlled on any number
/// of qubits. Controls are ordered (the order is kept for export), pairwise
/// distinct and never equal to the target. The kind is tied to the control
/// count: H/X take none, CX one, CCX two, MCX three or more.
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<std::uint32_t> controls;
  std::uint32_t target = 0;

  static Gate h(std::uint32_t qubit);
  static Gate x(std::uint32_t qubit);
  static Gate cx(std::uint32_t control, std::uint32_t target);
  static Gate ccx(std::uint32_t control0, std::uint32_t control1, std::uint32_t target);
  static Gate mcx(std::vector<std::uint32_t> controls, std::uint32_t target);

  /// Picks CX/CCX/MCX (or a plain X for no controls) from the control count.
  static Gate controlled_x(std::vector<std::uint32_t> controls, std::uint32_t target);

  std::uint32_t max_qubit() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Throws std::invalid_argument if the control/target lists violate the
/// Gate invariants (duplicates, control == target, kind-arity mismatch).
void validate_gate(const Gate& gate);

/// Annotation between gates; never affects simulation. `position` is the
/// number of gates preceding the barrier.
struct Barrier {
  std::size_t position = 0;
  std::string label;

  friend bool operator==(const Barrier&, const Barrier&) = default;
};

/// An ordered gate list over a fixed number of qubits. Immutable once built
/// (builders return by value); safe to share across threads.
class Circuit {
 public:
  explicit Circuit(std::uint32_t width);

  std::uint32_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<Barrier>& barriers() const { return barriers_; }

  /// Validates the gate and its qubit indices against the circuit width.
  Circuit& add(Gate gate);

  Circuit& h(std::uint32_t q) { return add(Gate::h(q)); }
  Circuit& x(std::uint32_t q) { return add(Gate::x(q)); }
  Circuit& cx(std::uint32_t c, std::uint32_t t) { return add(Gate::cx(c, t)); }
  Circuit& ccx(std::uint32_t c0, std::uint32_t c1, std::uint32_t t) { return add(Gate::ccx(c0, c1, t)); }
  Circuit& mcx(std::vector<std::uint32_t> cs, std::uint32_t t) { return add(Gate::mcx(std::move(cs), t)); }
  Circuit& controlled_x(std::vector<std::uint32_t> cs, std::uint32_t t) {
    return add(Gate::controlled_x(std::move(cs), t));
  }

  Circuit& barrier(std::string label = {});

  /// Concatenates another circuit of the same width (gates then barriers,
  /// barrier positions shifted past the existing gates).
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;
  friend Circuit adjoint(const Circuit& circuit);

 private:
  std::uint32_t width_;
  std::vector<Gate> gates_;
  std::vector<Barrier> barriers_;
};

/// Hermitian conjugate. Every supported gate is self-inverse, so this is the
/// same gates in reverse order; barriers keep their relative placement.
Circuit adjoint(const Circuit& circuit);

struct GateCounts {
  std::uint64_t h = 0;
  std::uint64_t x = 0;
  std::uint64_t cx = 0;
  std::uint64_t ccx = 0;
  std::uint64_t mcx = 0;

  std::uint64_t total() const { return h + x + cx + ccx + mcx; }

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts gate_counts(const Circuit& circuit);

/// Maps qubit indices to named registers for textual export. Registers are
/// declared in list order and together must cover 0..width-1 exactly once.
struct QubitNaming {
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> registers;

  static QubitNaming single_register(std::string name, std::uint32_t width);

  std::uint32_t width() const;
  std::string label(std::uint32_t qubit) const;
};

/// Renders the circuit as OpenQASM 3 text: one gate per line, multi-controlled
/// NOTs written with a ctrl(n) modifier on x, barriers as `barrier;` lines
/// with the label in a trailing comment. Deterministic byte-for-byte, LF line
/// endings.
std::string export_text(const Circuit& circuit, const QubitNaming& naming);

/// Same with a single anonymous register `q`.
std::string export_text(const Circuit& circuit);

}  // namespace qdio
