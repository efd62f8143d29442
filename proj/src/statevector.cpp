#include "qdio/statevector.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <thread>

#include "qdio/errors.hpp"

namespace qdio {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::atomic<unsigned> g_max_threads{0};

std::string memory_string(std::uint32_t width) {
  // 2^width amplitudes, 16 bytes each
  const double gib = std::ldexp(16.0, static_cast<int>(width) - 30);
  char buf[64];
  if (gib >= 1.0) {
    std::snprintf(buf, sizeof buf, "%.0f GiB", gib);
  } else {
    std::snprintf(buf, sizeof buf, "%.0f MiB", gib * 1024.0);
  }
  return buf;
}

// Pair index p -> lower basis index of the pair, inserting a zero at the
// target bit. low_mask covers the bits below the target.
inline std::uint64_t insert_zero_bit(std::uint64_t p, std::uint64_t low_mask) {
  return ((p & ~low_mask) << 1) | (p & low_mask);
}

// Splits [0, pair_count) into contiguous chunks and runs `sweep` on each.
// Chunks touch disjoint amplitude pairs, so the result is bitwise identical
// to the serial sweep.
template <typename Sweep>
void parallel_pairs(std::uint64_t pair_count, Sweep&& sweep) {
  constexpr std::uint64_t kParallelThreshold = 1ull << 20;
  unsigned threads = g_max_threads.load(std::memory_order_relaxed);
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads <= 1 || pair_count < kParallelThreshold) {
    sweep(std::uint64_t{0}, pair_count);
    return;
  }
  const std::uint64_t chunk = (pair_count + threads - 1) / threads;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min<std::uint64_t>(t * chunk, pair_count);
    const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, pair_count);
    if (begin == end) break;
    workers.emplace_back([&sweep, begin, end] { sweep(begin, end); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

void StateVector::check_width(std::uint32_t width, std::uint32_t max_width) {
  if (width == 0) throw CapacityError("state width must be at least 1");
  if (width > max_width) {
    throw CapacityError("state width " + std::to_string(width) + " exceeds the limit of " +
                        std::to_string(max_width) + " qubits (a width-" + std::to_string(width) +
                        " state needs " + memory_string(width) +
                        " of amplitudes; raise the width limit to allow it)");
  }
}

StateVector::StateVector(std::uint32_t width, std::uint32_t max_width) {
  check_width(width, max_width);
  amplitudes_.assign(std::uint64_t{1} << width, {0.0, 0.0});
  amplitudes_[0] = {1.0, 0.0};
  width_ = width;
}

StateVector StateVector::basis_state(std::uint32_t width, std::uint64_t index,
                                     std::uint32_t max_width) {
  StateVector state(width, max_width);
  if (index >= state.size()) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " does not fit in " + std::to_string(width) + " qubits");
  }
  state.amplitudes_[0] = {0.0, 0.0};
  state.amplitudes_[index] = {1.0, 0.0};
  return state;
}

StateVector StateVector::from_amplitudes(std::vector<std::complex<double>> amplitudes) {
  if (amplitudes.size() < 2 || !std::has_single_bit(amplitudes.size())) {
    throw std::invalid_argument("amplitude count must be a power of two (got " +
                                std::to_string(amplitudes.size()) + ")");
  }
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("amplitudes must be normalized (norm^2 = " +
                                std::to_string(norm) + ")");
  }
  StateVector state;
  state.width_ = static_cast<std::uint32_t>(std::countr_zero(amplitudes.size()));
  state.amplitudes_ = std::move(amplitudes);
  return state;
}

void StateVector::set_max_threads(unsigned count) {
  g_max_threads.store(count, std::memory_order_relaxed);
}

void StateVector::apply(const Gate& gate) {
  validate_gate(gate);
  if (gate.max_qubit() >= width_) {
    throw std::out_of_range("gate touches qubit " + std::to_string(gate.max_qubit()) +
                            " but the state has " + std::to_string(width_) + " qubits");
  }
  const std::uint64_t target_mask = std::uint64_t{1} << gate.target;
  if (gate.kind == GateKind::H) {
    apply_hadamard(target_mask);
    return;
  }
  std::uint64_t control_mask = 0;
  for (std::uint32_t c : gate.controls) control_mask |= std::uint64_t{1} << c;
  apply_controlled_x(control_mask, target_mask);
}

void StateVector::apply(const Circuit& circuit) {
  if (circuit.width() > width_) {
    throw std::invalid_argument("circuit width " + std::to_string(circuit.width()) +
                                " exceeds state width " + std::to_string(width_));
  }
  for (const Gate& g : circuit.gates()) apply(g);
}

void StateVector::apply_hadamard(std::uint64_t target_mask) {
  auto* amps = amplitudes_.data();
  const std::uint64_t low_mask = target_mask - 1;
  parallel_pairs(amplitudes_.size() / 2, [=](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t p = begin; p < end; ++p) {
      const std::uint64_t i0 = insert_zero_bit(p, low_mask);
      const std::uint64_t i1 = i0 | target_mask;
      const std::complex<double> a = amps[i0];
      const std::complex<double> b = amps[i1];
      amps[i0] = (a + b) * kInvSqrt2;
      amps[i1] = (a - b) * kInvSqrt2;
    }
  });
}

void StateVector::apply_controlled_x(std::uint64_t control_mask, std::uint64_t target_mask) {
  auto* amps = amplitudes_.data();
  const std::uint64_t low_mask = target_mask - 1;
  parallel_pairs(amplitudes_.size() / 2, [=](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t p = begin; p < end; ++p) {
      const std::uint64_t i0 = insert_zero_bit(p, low_mask);
      if ((i0 & control_mask) == control_mask) {
        std::swap(amps[i0], amps[i0 | target_mask]);
      }
    }
  });
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

namespace {

void validate_marginal_qubits(std::span<const std::uint32_t> qubits, std::uint32_t width) {
  if (qubits.empty()) throw std::invalid_argument("marginal needs at least one qubit");
  std::uint64_t seen = 0;
  for (std::uint32_t q : qubits) {
    if (q >= width) {
      throw std::out_of_range("marginal qubit " + std::to_string(q) +
                              " out of range for width " + std::to_string(width));
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (seen & bit) throw std::invalid_argument("marginal qubit " + std::to_string(q) + " repeated");
    seen |= bit;
  }
}

std::string key_string(std::uint64_t key, std::size_t bits) {
  std::string s(bits, '0');
  for (std::size_t j = 0; j < bits; ++j) {
    if ((key >> (bits - 1 - j)) & 1) s[j] = '1';
  }
  return s;
}

}  // namespace

std::vector<double> StateVector::marginal(std::span<const std::uint32_t> qubits) const {
  validate_marginal_qubits(qubits, width_);
  std::vector<double> probabilities(std::uint64_t{1} << qubits.size(), 0.0);
  // Serial on purpose: the accumulation order fixes the rounding, and sampling
  // must not depend on the thread count.
  for (std::uint64_t b = 0; b < amplitudes_.size(); ++b) {
    std::uint64_t key = 0;
    for (std::uint32_t q : qubits) key = (key << 1) | ((b >> q) & 1);
    probabilities[key] += std::norm(amplitudes_[b]);
  }
  return probabilities;
}

std::map<std::string, double> StateVector::marginal_probabilities(
    std::span<const std::uint32_t> qubits) const {
  const std::vector<double> probabilities = marginal(qubits);
  std::map<std::string, double> out;
  for (std::uint64_t key = 0; key < probabilities.size(); ++key) {
    out.emplace(key_string(key, qubits.size()), probabilities[key]);
  }
  return out;
}

std::map<std::string, std::uint64_t> StateVector::sample(std::span<const std::uint32_t> qubits,
                                                         std::uint64_t shots,
                                                         std::uint64_t seed) const {
  if (shots == 0) throw std::invalid_argument("sampling needs at least one shot");
  const std::vector<double> probabilities = marginal(qubits);

  std::vector<double> cdf(probabilities.size());
  double running = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::uint64_t key = 0; key < probabilities.size(); ++key) {
    running += probabilities[key];
    cdf[key] = running;
    if (probabilities[key] > 0.0) last_nonzero = key;
  }

  // mt19937_64 plus an explicit 53-bit uniform keeps draws identical across
  // standard libraries, unlike std::uniform_real_distribution.
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::uint64_t key = static_cast<std::uint64_t>(it - cdf.begin());
    if (key > last_nonzero) key = last_nonzero;  // u fell in the rounding gap above cdf.back()
    ++counts[key];
  }

  std::map<std::string, std::uint64_t> out;
  for (std::uint64_t key = 0; key < counts.size(); ++key) {
    if (counts[key] > 0) out.emplace(key_string(key, qubits.size()), counts[key]);
  }
  return out;
}

}  // namespace qdio
