#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qdio/circuit.hpp"

namespace qdio {

/// Qubit roles for the m-bit adder and the surrounding search circuit.
///
/// Number encoding: register bit 0 is the most significant, so an m-bit
/// value v puts bit (m-1-i) of v on x_qubits[i] (likewise y), and the m+1
/// bit sum puts bit (m-i) on sum_qubits[i].
struct RegisterLayout {
  std::uint32_t m = 0;
  std::vector<std::uint32_t> x_qubits;      // x0 first (most significant)
  std::vector<std::uint32_t> y_qubits;      // y0 first
  std::vector<std::uint32_t> carry_qubits;  // a0 first, m-1 entries
  std::vector<std::uint32_t> sum_qubits;    // s0 first (most significant), m+1 entries
  std::uint32_t oracle_qubit = 0;

  std::uint32_t total_width() const { return 4 * m + 1; }

  /// The 2m qubits encoding the candidate pair, x register then y register.
  std::vector<std::uint32_t> index_qubits() const;

  /// Carries then sum: everything the oracle must return to zero.
  std::vector<std::uint32_t> work_qubits() const;
};

/// Default assignment: x_i = i, y_i = m+i, a_j = 2m+j, s_i = 3m-1+i,
/// oracle = 4m. Throws std::invalid_argument for m = 0.
RegisterLayout build_layout(std::uint32_t m);

/// Throws std::invalid_argument unless the layout's registers are disjoint
/// and cover exactly 0..4m.
void validate_layout(const RegisterLayout& layout);

/// Builds the non-overwriting adder: on every basis state |x, y, a=0, s=0>
/// it produces |x, y, carries(x,y), x+y>. The input registers are never
/// targeted. Carry ancillas are left holding the ripple carries; callers
/// that need them cleared run the adjoint afterwards.
///
/// Stage t (least significant first) adds bit t of x and y into sum bit t:
/// two CNOTs onto the sum digit and a Toffoli computing the carry, plus —
/// from stage 1 on — a CNOT folding in the previous carry and two Toffolis
/// completing the majority into the carry target. The last stage's carry
/// target is the top sum digit s0 instead of an ancilla. Totals: 3m-1 CNOT,
/// 3m-2 Toffoli. A labelled barrier closes each stage.
Circuit build_adder(const RegisterLayout& layout);

/// Naming for export: x_in, y_in, carry (when present), sum, oracle.
QubitNaming register_naming(const RegisterLayout& layout);

/// Value -> bit string, first character most significant. Throws when the
/// value does not fit.
std::string encode_bits(std::uint64_t value, std::uint32_t bits);

/// Inverse of encode_bits; accepts only '0'/'1'.
std::uint64_t decode_bits(std::string_view bits);

}  // namespace qdio
