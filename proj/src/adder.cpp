#include "qdio/adder.hpp"

#include <stdexcept>
#include <vector>

namespace qdio {

std::vector<std::uint32_t> RegisterLayout::index_qubits() const {
  std::vector<std::uint32_t> qubits = x_qubits;
  qubits.insert(qubits.end(), y_qubits.begin(), y_qubits.end());
  return qubits;
}

std::vector<std::uint32_t> RegisterLayout::work_qubits() const {
  std::vector<std::uint32_t> qubits = carry_qubits;
  qubits.insert(qubits.end(), sum_qubits.begin(), sum_qubits.end());
  return qubits;
}

RegisterLayout build_layout(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("register width m must be at least 1");
  RegisterLayout layout;
  layout.m = m;
  for (std::uint32_t i = 0; i < m; ++i) layout.x_qubits.push_back(i);
  for (std::uint32_t i = 0; i < m; ++i) layout.y_qubits.push_back(m + i);
  for (std::uint32_t j = 0; j + 1 < m; ++j) layout.carry_qubits.push_back(2 * m + j);
  for (std::uint32_t i = 0; i <= m; ++i) layout.sum_qubits.push_back(3 * m - 1 + i);
  layout.oracle_qubit = 4 * m;
  return layout;
}

void validate_layout(const RegisterLayout& layout) {
  const std::uint32_t m = layout.m;
  if (m == 0) throw std::invalid_argument("register width m must be at least 1");
  if (layout.x_qubits.size() != m || layout.y_qubits.size() != m ||
      layout.carry_qubits.size() != m - 1 || layout.sum_qubits.size() != m + 1) {
    throw std::invalid_argument("layout register sizes do not match m = " + std::to_string(m));
  }
  const std::uint32_t width = layout.total_width();
  std::vector<bool> used(width, false);
  auto mark = [&](std::uint32_t q) {
    if (q >= width || used[q]) {
      throw std::invalid_argument("layout qubits must be distinct and cover 0.." +
                                  std::to_string(width - 1));
    }
    used[q] = true;
  };
  for (std::uint32_t q : layout.x_qubits) mark(q);
  for (std::uint32_t q : layout.y_qubits) mark(q);
  for (std::uint32_t q : layout.carry_qubits) mark(q);
  for (std::uint32_t q : layout.sum_qubits) mark(q);
  mark(layout.oracle_qubit);
}

namespace {

std::string stage_label(std::uint32_t stage) {
  if (stage < 26) return std::string(1, static_cast<char>('A' + stage));
  return "S" + std::to_string(stage);
}

}  // namespace

Circuit build_adder(const RegisterLayout& layout) {
  validate_layout(layout);
  const std::uint32_t m = layout.m;
  Circuit circuit(layout.total_width());

  // Stage t handles significance t: x bit t lives on x_qubits[m-1-t], the sum
  // digit on sum_qubits[m-t]. The carry out of the last stage is the top sum
  // digit rather than an ancilla.
  for (std::uint32_t t = 0; t < m; ++t) {
    const std::uint32_t x = layout.x_qubits[m - 1 - t];
    const std::uint32_t y = layout.y_qubits[m - 1 - t];
    const std::uint32_t sum = layout.sum_qubits[m - t];
    const std::uint32_t carry_out = (t + 1 < m) ? layout.carry_qubits[t] : layout.sum_qubits[0];

    circuit.cx(x, sum);
    circuit.cx(y, sum);
    circuit.ccx(x, y, carry_out);
    if (t > 0) {
      const std::uint32_t carry_in = layout.carry_qubits[t - 1];
      circuit.cx(carry_in, sum);
      circuit.ccx(x, carry_in, carry_out);
      circuit.ccx(y, carry_in, carry_out);
    }
    circuit.barrier(stage_label(t));
  }
  return circuit;
}

QubitNaming register_naming(const RegisterLayout& layout) {
  validate_layout(layout);
  QubitNaming naming;
  naming.registers.emplace_back("x_in", layout.x_qubits);
  naming.registers.emplace_back("y_in", layout.y_qubits);
  if (!layout.carry_qubits.empty()) naming.registers.emplace_back("carry", layout.carry_qubits);
  naming.registers.emplace_back("sum", layout.sum_qubits);
  naming.registers.emplace_back("oracle", std::vector<std::uint32_t>{layout.oracle_qubit});
  return naming;
}

std::string encode_bits(std::uint64_t value, std::uint32_t bits) {
  if (bits == 0 || bits > 63) throw std::invalid_argument("bit count must be in 1..63");
  if (value >> bits) {
    throw std::invalid_argument("value " + std::to_string(value) + " does not fit in " +
                                std::to_string(bits) + " bits");
  }
  std::string s(bits, '0');
  for (std::uint32_t i = 0; i < bits; ++i) {
    if ((value >> (bits - 1 - i)) & 1) s[i] = '1';
  }
  return s;
}

std::uint64_t decode_bits(std::string_view bits) {
  if (bits.empty() || bits.size() > 63) throw std::invalid_argument("bit string length must be in 1..63");
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string may contain only 0 and 1");
    value = (value << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return value;
}

}  // namespace qdio
