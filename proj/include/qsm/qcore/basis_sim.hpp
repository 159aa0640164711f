#pragma once

// Exact simulation of reversible-classical circuits: one bit per qubit.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsm/qcore/circuit.hpp"

namespace qsm {

class BasisState {
 public:
  BasisState() = default;
  explicit BasisState(std::size_t qubits) : bits_(qubits, 0) {}

  std::size_t num_qubits() const noexcept { return bits_.size(); }

  bool bit(Qubit q) const { return bits_.at(q) != 0; }
  void set_bit(Qubit q, bool v) { bits_.at(q) = v ? 1 : 0; }
  void flip(Qubit q) { bits_.at(q) ^= 1; }

  bool get(const Register& reg, std::size_t i) const { return bit(reg[i]); }
  /// Little-endian value of up to 64 qubits.
  std::uint64_t value(std::span<const Qubit> qubits) const;
  std::uint64_t value(const Register& reg) const;
  void set_value(std::span<const Qubit> qubits, std::uint64_t v);
  void set_value(const Register& reg, std::uint64_t v);
  bool all_zero(const Register& reg) const;

  /// Index of this state in a statevector (requires <= 64 qubits).
  std::uint64_t to_index() const;
  static BasisState from_index(std::size_t qubits, std::uint64_t index);

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Applies gates one at a time; used by the circuit runners to tap state
/// between iterations.
class BasisSimulator {
 public:
  explicit BasisSimulator(BasisState initial) : state_(std::move(initial)) {}

  /// Throws NonClassicalGateError (with `index`) for H, Z and PHASE_FLIP_IF.
  void apply(const GateOp& gate, std::size_t index = 0);
  void run(const Circuit& circuit, std::size_t first, std::size_t last);

  const BasisState& state() const noexcept { return state_; }

 private:
  BasisState state_;
};

BasisState run_basis(const Circuit& circuit, BasisState input);

}  // namespace qsm
