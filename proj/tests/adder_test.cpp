#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qdio/adder.hpp"
#include "qdio/statevector.hpp"
#include "test_util.hpp"

using qdio::build_adder;
using qdio::build_layout;
using qdio::Circuit;
using qdio::Gate;
using qdio::RegisterLayout;
using qdio::StateVector;

namespace {

// Independent assembly of the basis index |x, y, a=0, s=0, oracle=0>.
std::uint64_t input_index(const RegisterLayout& layout, std::uint64_t x, std::uint64_t y) {
  const std::uint32_t m = layout.m;
  std::uint64_t index = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    index |= ((x >> (m - 1 - i)) & 1) << layout.x_qubits[i];
    index |= ((y >> (m - 1 - i)) & 1) << layout.y_qubits[i];
  }
  return index;
}

// Classical ripple-carry reference: the carries and the sum, bit by bit.
struct RippleResult {
  std::vector<std::uint64_t> carries;  // carry out of significance t, t = 0..m-2
  std::uint64_t sum = 0;
};

RippleResult ripple_add(std::uint32_t m, std::uint64_t x, std::uint64_t y) {
  RippleResult result;
  std::uint64_t carry = 0;
  for (std::uint32_t t = 0; t < m; ++t) {
    const std::uint64_t xb = (x >> t) & 1, yb = (y >> t) & 1;
    result.sum |= (xb ^ yb ^ carry) << t;
    carry = (xb & yb) | (carry & (xb ^ yb));
    if (t + 1 < m) result.carries.push_back(carry);
  }
  result.sum |= carry << m;
  return result;
}

std::uint64_t expected_index(const RegisterLayout& layout, std::uint64_t x, std::uint64_t y) {
  const std::uint32_t m = layout.m;
  const RippleResult ripple = ripple_add(m, x, y);
  std::uint64_t index = input_index(layout, x, y);
  for (std::uint32_t t = 0; t + 1 < m; ++t) index |= ripple.carries[t] << layout.carry_qubits[t];
  for (std::uint32_t i = 0; i <= m; ++i) {
    index |= ((ripple.sum >> (m - i)) & 1) << layout.sum_qubits[i];
  }
  return index;
}

std::uint64_t sum_register_value(const RegisterLayout& layout, std::uint64_t basis) {
  std::uint64_t value = 0;
  for (std::uint32_t q : layout.sum_qubits) value = (value << 1) | ((basis >> q) & 1);
  return value;
}

}  // namespace

TEST_CASE("default layout packs registers in role order") {
  const RegisterLayout layout = build_layout(3);
  CHECK(layout.x_qubits == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(layout.y_qubits == std::vector<std::uint32_t>{3, 4, 5});
  CHECK(layout.carry_qubits == std::vector<std::uint32_t>{6, 7});
  CHECK(layout.sum_qubits == std::vector<std::uint32_t>{8, 9, 10, 11});
  CHECK(layout.oracle_qubit == 12);
  CHECK(layout.total_width() == 13);

  const RegisterLayout one = build_layout(1);
  CHECK(one.x_qubits == std::vector<std::uint32_t>{0});
  CHECK(one.y_qubits == std::vector<std::uint32_t>{1});
  CHECK(one.carry_qubits.empty());
  CHECK(one.sum_qubits == std::vector<std::uint32_t>{2, 3});
  CHECK(one.oracle_qubit == 4);

  CHECK(build_layout(4).total_width() == 17);
  CHECK_THROWS_AS(build_layout(0), std::invalid_argument);
}

TEST_CASE("adder reproduces the known m=3 columns") {
  const RegisterLayout layout = build_layout(3);
  const Circuit adder = build_adder(layout);
  const std::vector<Gate> expected = {
      Gate::cx(2, 11), Gate::cx(5, 11), Gate::ccx(2, 5, 6),                    // stage A
      Gate::cx(1, 10), Gate::cx(4, 10), Gate::ccx(1, 4, 7),
      Gate::cx(6, 10), Gate::ccx(1, 6, 7), Gate::ccx(4, 6, 7),                 // stage B
      Gate::cx(0, 9),  Gate::cx(3, 9),  Gate::ccx(0, 3, 8),
      Gate::cx(7, 9),  Gate::ccx(0, 7, 8), Gate::ccx(3, 7, 8),                 // stage C
  };
  CHECK(adder.gates() == expected);
  REQUIRE(adder.barriers().size() == 3);
  CHECK(adder.barriers()[0] == qdio::Barrier{3, "A"});
  CHECK(adder.barriers()[1] == qdio::Barrier{9, "B"});
  CHECK(adder.barriers()[2] == qdio::Barrier{15, "C"});
}

TEST_CASE("adder m=1 degenerates to two CNOTs and one Toffoli") {
  const RegisterLayout layout = build_layout(1);
  const Circuit adder = build_adder(layout);
  const std::vector<Gate> expected = {Gate::cx(0, 3), Gate::cx(1, 3), Gate::ccx(0, 1, 2)};
  CHECK(adder.gates() == expected);
}

TEST_CASE("adder computes x + y on paper examples") {
  const RegisterLayout layout = build_layout(3);
  const Circuit adder = build_adder(layout);

  StateVector five = StateVector::basis_state(13, input_index(layout, 5, 0));
  five.apply(adder);
  CHECK(five.amplitude(expected_index(layout, 5, 0)) == std::complex<double>{1.0, 0.0});
  CHECK(sum_register_value(layout, expected_index(layout, 5, 0)) == 0b0101);

  StateVector zero = StateVector::basis_state(13, input_index(layout, 0, 0));
  zero.apply(adder);
  CHECK(zero.amplitude(0) == std::complex<double>{1.0, 0.0});

  StateVector full = StateVector::basis_state(13, input_index(layout, 7, 7));
  full.apply(adder);
  CHECK(sum_register_value(layout, expected_index(layout, 7, 7)) == 0b1110);
  CHECK(full.amplitude(expected_index(layout, 7, 7)) == std::complex<double>{1.0, 0.0});
}

TEST_CASE("adder is exhaustively correct for m = 1..4") {
  for (std::uint32_t m = 1; m <= 4; ++m) {
    const RegisterLayout layout = build_layout(m);
    const Circuit adder = build_adder(layout);
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t x = 0; x < limit; ++x) {
      for (std::uint64_t y = 0; y < limit; ++y) {
        // classical permutation track, checked against the statevector below
        const std::uint64_t got = test_util::classical_apply(adder, input_index(layout, x, y));
        REQUIRE(got == expected_index(layout, x, y));
      }
    }
    // spot-check the permutation track against full simulation
    std::mt19937_64 rng(m);
    for (int trial = 0; trial < 8; ++trial) {
      const std::uint64_t x = rng() % limit, y = rng() % limit;
      StateVector state = StateVector::basis_state(layout.total_width(), input_index(layout, x, y));
      state.apply(adder);
      REQUIRE(state.amplitude(expected_index(layout, x, y)) == std::complex<double>{1.0, 0.0});
    }
  }
}

TEST_CASE("adder matches the published gate-count law") {
  const qdio::GateCounts m3 = qdio::gate_counts(build_adder(build_layout(3)));
  CHECK(m3.cx == 8);
  CHECK(m3.ccx == 7);
  for (std::uint32_t m = 1; m <= 8; ++m) {
    const qdio::GateCounts counts = qdio::gate_counts(build_adder(build_layout(m)));
    CHECK(counts.cx == 3 * m - 1);
    CHECK(counts.ccx == 3 * m - 2);
    CHECK(counts.h == 0);
    CHECK(counts.x == 0);
    CHECK(counts.mcx == 0);
  }
  const qdio::GateCounts m2 = qdio::gate_counts(build_adder(build_layout(2)));
  CHECK(m2.cx == 5);
  CHECK(m2.ccx == 4);
}

TEST_CASE("no adder gate targets the input registers") {
  for (std::uint32_t m = 1; m <= 8; ++m) {
    const RegisterLayout layout = build_layout(m);
    std::set<std::uint32_t> inputs(layout.x_qubits.begin(), layout.x_qubits.end());
    inputs.insert(layout.y_qubits.begin(), layout.y_qubits.end());
    for (const Gate& g : build_adder(layout).gates()) {
      REQUIRE(inputs.count(g.target) == 0);
    }
  }
}

TEST_CASE("adder followed by its adjoint is the identity") {
  for (std::uint32_t m = 1; m <= 4; ++m) {
    const RegisterLayout layout = build_layout(m);
    const Circuit adder = build_adder(layout);
    const Circuit reversed = qdio::adjoint(adder);
    // permutation track over every full-width basis state, dirty work bits included
    const std::uint64_t states = std::uint64_t{1} << layout.total_width();
    for (std::uint64_t b = 0; b < states; ++b) {
      REQUIRE(test_util::classical_apply(reversed, test_util::classical_apply(adder, b)) == b);
    }
  }
  // statevector spot check on superpositions
  std::mt19937_64 rng(41);
  const RegisterLayout layout = build_layout(2);
  const Circuit adder = build_adder(layout);
  for (int trial = 0; trial < 20; ++trial) {
    StateVector state = test_util::random_state(layout.total_width(), rng);
    const std::vector<std::complex<double>> before(state.amplitudes().begin(),
                                                   state.amplitudes().end());
    state.apply(adder);
    state.apply(qdio::adjoint(adder));
    for (std::uint64_t b = 0; b < state.size(); ++b) {
      REQUIRE(std::abs(state.amplitude(b) - before[b]) < 1e-10);
    }
  }
}

TEST_CASE("carry ancillas hold the ripple carries") {
  for (std::uint32_t m = 2; m <= 4; ++m) {
    const RegisterLayout layout = build_layout(m);
    const Circuit adder = build_adder(layout);
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t x = 0; x < limit; ++x) {
      for (std::uint64_t y = 0; y < limit; ++y) {
        const std::uint64_t out = test_util::classical_apply(adder, input_index(layout, x, y));
        const RippleResult ripple = ripple_add(m, x, y);
        for (std::uint32_t t = 0; t + 1 < m; ++t) {
          REQUIRE(((out >> layout.carry_qubits[t]) & 1) == ripple.carries[t]);
        }
      }
    }
  }
}

TEST_CASE("number encoding puts the first bit highest") {
  CHECK(qdio::encode_bits(5, 3) == "101");
  CHECK(qdio::encode_bits(5, 4) == "0101");
  CHECK(qdio::encode_bits(0, 2) == "00");
  CHECK(qdio::decode_bits("101") == 5);
  CHECK(qdio::decode_bits("0101") == 5);
  CHECK_THROWS_AS(qdio::encode_bits(8, 3), std::invalid_argument);
  CHECK_THROWS_AS(qdio::decode_bits("10x"), std::invalid_argument);
  CHECK_THROWS_AS(qdio::decode_bits(""), std::invalid_argument);
}

TEST_CASE("register naming covers the full layout") {
  const RegisterLayout layout = build_layout(3);
  const qdio::QubitNaming naming = qdio::register_naming(layout);
  CHECK(naming.width() == 13);
  CHECK(naming.label(0) == "x_in[0]");
  CHECK(naming.label(5) == "y_in[2]");
  CHECK(naming.label(6) == "carry[0]");
  CHECK(naming.label(11) == "sum[3]");
  CHECK(naming.label(12) == "oracle[0]");

  const qdio::QubitNaming tiny = qdio::register_naming(build_layout(1));
  CHECK(tiny.width() == 5);  // no carry register at m = 1
  CHECK(tiny.registers.size() == 4);
}
