#pragma once

// Dense statevector simulator for small circuits (Q <= cap, default 22).
// Macro gates are expanded to elementary gates before application, so this
// path shares no gate semantics with the basis-state simulator.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qsm/qcore/circuit.hpp"

namespace qsm {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultStatevectorCap = 22;

class Statevector {
 public:
  /// |0...0> on `qubits` qubits. Throws ResourceError above `cap`.
  explicit Statevector(std::size_t qubits, std::size_t cap = kDefaultStatevectorCap);

  static Statevector basis(std::size_t qubits, std::uint64_t index,
                           std::size_t cap = kDefaultStatevectorCap);

  std::size_t num_qubits() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }
  Amplitude& operator[](std::size_t i) { return amps_[i]; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

 private:
  std::size_t qubits_;
  std::vector<Amplitude> amps_;
};

enum class Execution { parallel, serial_reference };

/// Applies one elementary gate in place. Macro kinds throw DomainError.
void apply_gate(Statevector& state, const GateOp& gate);

namespace reference {
/// Straightforward out-of-place serial kernel kept as the test reference.
void apply_gate(Statevector& state, const GateOp& gate);
}  // namespace reference

Statevector run_statevector(const Circuit& circuit, Statevector input,
                            Execution mode = Execution::parallel);

struct RegisterMeasurement {
  std::vector<double> distribution;  // indexed by register value
  std::uint64_t sampled = 0;
};

/// Exact marginal distribution of `reg` plus one seeded sample.
RegisterMeasurement measure_register(const Statevector& state, const Register& reg,
                                     std::uint64_t seed);

/// Inverse-CDF sample from `distribution` with a seeded 64-bit generator.
std::uint64_t sample_index(std::span<const double> distribution, std::uint64_t seed);

}  // namespace qsm
