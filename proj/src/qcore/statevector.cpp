#include "qsm/qcore/statevector.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qsm/errors.hpp"

namespace qsm {

Statevector::Statevector(std::size_t qubits, std::size_t cap) : qubits_(qubits) {
  if (qubits > cap) {
    throw ResourceError("statevector needs " + std::to_string(qubits) + " qubits, cap is " +
                            std::to_string(cap),
                        qubits, cap);
  }
  amps_.assign(std::size_t{1} << qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

Statevector Statevector::basis(std::size_t qubits, std::uint64_t index, std::size_t cap) {
  Statevector s(qubits, cap);
  if (index >= s.dimension()) throw DomainError("basis index outside the state space");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double Statevector::norm_squared() const {
  double total = 0.0;
  const auto dim = static_cast<std::ptrdiff_t>(amps_.size());
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::ptrdiff_t i = 0; i < dim; ++i) total += std::norm(amps_[static_cast<std::size_t>(i)]);
  return total;
}

namespace {

std::uint64_t mask_of(const std::vector<Qubit>& qs) {
  std::uint64_t m = 0;
  for (Qubit q : qs) m |= std::uint64_t{1} << q;
  return m;
}

std::uint64_t gather(std::uint64_t index, const std::vector<Qubit>& qs) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) v |= ((index >> qs[i]) & 1U) << i;
  return v;
}

void check_range(const Statevector& s, const GateOp& g) {
  for (Qubit q : g.operands()) {
    if (q >= s.num_qubits()) throw DomainError("gate operand outside the statevector");
  }
}

}  // namespace

// In-place kernels. Each pair (or single amplitude) is owned by exactly one
// loop index, so iterations are independent.
void apply_gate(Statevector& state, const GateOp& g) {
  check_range(state, g);
  auto amps = state.amplitudes();
  const auto dim = static_cast<std::ptrdiff_t>(amps.size());

  switch (g.kind) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX: {
      const std::uint64_t tbit = std::uint64_t{1} << g.targets[0];
      const std::uint64_t cmask = mask_of(g.controls);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t ii = 0; ii < dim; ++ii) {
        const auto i = static_cast<std::uint64_t>(ii);
        if (!(i & tbit) && (i & cmask) == cmask) std::swap(amps[i], amps[i | tbit]);
      }
      break;
    }
    case GateKind::H: {
      if (!g.controls.empty()) throw DomainError("controlled H is not supported");
      const std::uint64_t tbit = std::uint64_t{1} << g.targets[0];
      const double r = 1.0 / std::sqrt(2.0);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t ii = 0; ii < dim; ++ii) {
        const auto i = static_cast<std::uint64_t>(ii);
        if (i & tbit) continue;
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i | tbit];
        amps[i] = (a0 + a1) * r;
        amps[i | tbit] = (a0 - a1) * r;
      }
      break;
    }
    case GateKind::Z: {
      const std::uint64_t mask = mask_of(g.controls) | (std::uint64_t{1} << g.targets[0]);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t ii = 0; ii < dim; ++ii) {
        const auto i = static_cast<std::uint64_t>(ii);
        if ((i & mask) == mask) amps[i] = -amps[i];
      }
      break;
    }
    case GateKind::SWAP: {
      const std::uint64_t a = std::uint64_t{1} << g.targets[0];
      const std::uint64_t b = std::uint64_t{1} << g.targets[1];
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t ii = 0; ii < dim; ++ii) {
        const auto i = static_cast<std::uint64_t>(ii);
        if ((i & a) && !(i & b)) std::swap(amps[i], amps[i ^ a ^ b]);
      }
      break;
    }
    case GateKind::PHASE_FLIP_IF: {
      const std::size_t values = std::size_t{1} << g.targets.size();
      std::vector<char> marked(values);
      for (std::size_t v = 0; v < values; ++v) marked[v] = (*g.predicate)(v) ? 1 : 0;
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t ii = 0; ii < dim; ++ii) {
        const auto i = static_cast<std::uint64_t>(ii);
        if (marked[gather(i, g.targets)]) amps[i] = -amps[i];
      }
      break;
    }
    default:
      throw DomainError(std::string("macro gate ") + std::string(to_string(g.kind)) +
                        " must be expanded before statevector application");
  }
}

Statevector run_statevector(const Circuit& circuit, Statevector input, Execution mode) {
  if (input.num_qubits() != circuit.num_qubits()) {
    throw DomainError("statevector has " + std::to_string(input.num_qubits()) +
                      " qubits, circuit has " + std::to_string(circuit.num_qubits()));
  }
  for (const GateOp& gate : circuit.gates()) {
    for (const GateOp& e : expand(gate)) {
      if (mode == Execution::parallel) {
        apply_gate(input, e);
      } else {
        reference::apply_gate(input, e);
      }
    }
  }
  return input;
}

std::uint64_t sample_index(std::span<const double> distribution, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  double total = 0.0;
  for (double p : distribution) total += p;
  double acc = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    if (distribution[i] <= 0.0) continue;
    last_nonzero = i;
    acc += distribution[i];
    if (u * total < acc) return i;
  }
  return last_nonzero;
}

RegisterMeasurement measure_register(const Statevector& state, const Register& reg,
                                     std::uint64_t seed) {
  if (reg.size > 30) throw DomainError("register too wide to tabulate");
  const std::vector<Qubit> qs = reg.qubits();
  for (Qubit q : qs) {
    if (q >= state.num_qubits()) throw DomainError("register outside the statevector");
  }
  RegisterMeasurement out;
  out.distribution.assign(std::size_t{1} << reg.size, 0.0);
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) out.distribution[gather(i, qs)] += std::norm(amps[i]);
  out.sampled = sample_index(out.distribution, seed);
  return out;
}

}  // namespace qsm
