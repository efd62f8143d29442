#include "qdio/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace qdio {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::CX: return "cx";
    case GateKind::CCX: return "ccx";
    case GateKind::MCX: return "mcx";
  }
  throw std::invalid_argument("unknown gate kind");
}

Gate Gate::h(std::uint32_t qubit) { return Gate{GateKind::H, {}, qubit}; }

Gate Gate::x(std::uint32_t qubit) { return Gate{GateKind::X, {}, qubit}; }

Gate Gate::cx(std::uint32_t control, std::uint32_t target) {
  Gate g{GateKind::CX, {control}, target};
  validate_gate(g);
  return g;
}

Gate Gate::ccx(std::uint32_t control0, std::uint32_t control1, std::uint32_t target) {
  Gate g{GateKind::CCX, {control0, control1}, target};
  validate_gate(g);
  return g;
}

Gate Gate::mcx(std::vector<std::uint32_t> controls, std::uint32_t target) {
  Gate g{GateKind::MCX, std::move(controls), target};
  validate_gate(g);
  return g;
}

Gate Gate::controlled_x(std::vector<std::uint32_t> controls, std::uint32_t target) {
  switch (controls.size()) {
    case 0: return x(target);
    case 1: return cx(controls[0], target);
    case 2: return ccx(controls[0], controls[1], target);
    default: return mcx(std::move(controls), target);
  }
}

std::uint32_t Gate::max_qubit() const {
  std::uint32_t highest = target;
  for (std::uint32_t c : controls) highest = std::max(highest, c);
  return highest;
}

void validate_gate(const Gate& gate) {
  std::size_t expected_min = 0, expected_max = 0;
  switch (gate.kind) {
    case GateKind::H:
    case GateKind::X: expected_min = expected_max = 0; break;
    case GateKind::CX: expected_min = expected_max = 1; break;
    case GateKind::CCX: expected_min = expected_max = 2; break;
    case GateKind::MCX: expected_min = 3; expected_max = SIZE_MAX; break;
  }
  if (gate.controls.size() < expected_min || gate.controls.size() > expected_max) {
    throw std::invalid_argument(std::string(gate_name(gate.kind)) + " gate given " +
                                std::to_string(gate.controls.size()) + " controls");
  }
  std::unordered_set<std::uint32_t> seen{gate.target};
  for (std::uint32_t c : gate.controls) {
    if (!seen.insert(c).second) {
      throw std::invalid_argument("gate qubits must be pairwise distinct (qubit " +
                                  std::to_string(c) + " repeated)");
    }
  }
}

Circuit::Circuit(std::uint32_t width) : width_(width) {
  if (width == 0) throw std::invalid_argument("circuit width must be at least 1");
}

Circuit& Circuit::add(Gate gate) {
  validate_gate(gate);
  if (gate.max_qubit() >= width_) {
    throw std::out_of_range("gate touches qubit " + std::to_string(gate.max_qubit()) +
                            " but the circuit has " + std::to_string(width_) + " qubits");
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::barrier(std::string label) {
  barriers_.push_back(Barrier{gates_.size(), std::move(label)});
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width_ != width_) {
    throw std::invalid_argument("cannot append a circuit of width " +
                                std::to_string(other.width_) + " to one of width " +
                                std::to_string(width_));
  }
  const std::size_t offset = gates_.size();
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  for (const Barrier& b : other.barriers_) {
    barriers_.push_back(Barrier{offset + b.position, b.label});
  }
  return *this;
}

Circuit adjoint(const Circuit& circuit) {
  Circuit reversed(circuit.width());
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) reversed.add(*it);
  const auto& barriers = circuit.barriers();
  for (auto it = barriers.rbegin(); it != barriers.rend(); ++it) {
    reversed.barriers_.push_back(Barrier{gates.size() - it->position, it->label});
  }
  return reversed;
}

GateCounts gate_counts(const Circuit& circuit) {
  GateCounts counts;
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::H: ++counts.h; break;
      case GateKind::X: ++counts.x; break;
      case GateKind::CX: ++counts.cx; break;
      case GateKind::CCX: ++counts.ccx; break;
      case GateKind::MCX: ++counts.mcx; break;
    }
  }
  return counts;
}

QubitNaming QubitNaming::single_register(std::string name, std::uint32_t width) {
  std::vector<std::uint32_t> qubits(width);
  for (std::uint32_t q = 0; q < width; ++q) qubits[q] = q;
  return QubitNaming{{{std::move(name), std::move(qubits)}}};
}

std::uint32_t QubitNaming::width() const {
  std::size_t total = 0;
  for (const auto& [name, qubits] : registers) total += qubits.size();
  return static_cast<std::uint32_t>(total);
}

std::string QubitNaming::label(std::uint32_t qubit) const {
  for (const auto& [name, qubits] : registers) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      if (qubits[i] == qubit) return name + "[" + std::to_string(i) + "]";
    }
  }
  throw std::out_of_range("qubit " + std::to_string(qubit) + " has no register name");
}

namespace {

void validate_naming(const QubitNaming& naming, std::uint32_t width) {
  std::vector<bool> covered(width, false);
  std::unordered_set<std::string> names;
  for (const auto& [name, qubits] : naming.registers) {
    if (name.empty()) throw std::invalid_argument("register name must not be empty");
    if (!names.insert(name).second) {
      throw std::invalid_argument("duplicate register name '" + name + "'");
    }
    for (std::uint32_t q : qubits) {
      if (q >= width || covered[q]) {
        throw std::invalid_argument("register map must cover each of the " +
                                    std::to_string(width) + " qubits exactly once");
      }
      covered[q] = true;
    }
  }
  for (bool c : covered) {
    if (!c) {
      throw std::invalid_argument("register map must cover each of the " +
                                  std::to_string(width) + " qubits exactly once");
    }
  }
}

}  // namespace

std::string export_text(const Circuit& circuit, const QubitNaming& naming) {
  validate_naming(naming, circuit.width());

  std::string out = "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
  for (const auto& [name, qubits] : naming.registers) {
    out += "qubit[" + std::to_string(qubits.size()) + "] " + name + ";\n";
  }

  const auto& gates = circuit.gates();
  const auto& barriers = circuit.barriers();
  std::size_t next_barrier = 0;
  auto emit_barriers_at = [&](std::size_t position) {
    while (next_barrier < barriers.size() && barriers[next_barrier].position == position) {
      out += "barrier;";
      if (!barriers[next_barrier].label.empty()) out += " // " + barriers[next_barrier].label;
      out += "\n";
      ++next_barrier;
    }
  };

  for (std::size_t i = 0; i < gates.size(); ++i) {
    emit_barriers_at(i);
    const Gate& g = gates[i];
    if (g.kind == GateKind::MCX) {
      out += "ctrl(" + std::to_string(g.controls.size()) + ") @ x ";
    } else {
      out += std::string(gate_name(g.kind)) + " ";
    }
    for (std::uint32_t c : g.controls) out += naming.label(c) + ", ";
    out += naming.label(g.target) + ";\n";
  }
  emit_barriers_at(gates.size());
  return out;
}

std::string export_text(const Circuit& circuit) {
  return export_text(circuit, QubitNaming::single_register("q", circuit.width()));
}

}  // namespace qdio
