// Serial out-of-place kernels: every gate is written as "new amplitude vector
// from old", with no pairing tricks. Kept as the reference the in-place
// OpenMP kernels are tested against.

#include <algorithm>
#include <cmath>
#include <string>

#include "qsm/errors.hpp"
#include "qsm/qcore/statevector.hpp"

namespace qsm::reference {

namespace {

bool bit(std::uint64_t i, Qubit q) { return (i >> q) & 1U; }

bool controls_hold(std::uint64_t i, const std::vector<Qubit>& controls) {
  for (Qubit c : controls) {
    if (!bit(i, c)) return false;
  }
  return true;
}

}  // namespace

void apply_gate(Statevector& state, const GateOp& g) {
  for (Qubit q : g.operands()) {
    if (q >= state.num_qubits()) throw DomainError("gate operand outside the statevector");
  }
  const auto in = state.amplitudes();
  std::vector<Amplitude> out(in.size(), Amplitude{0.0, 0.0});

  for (std::uint64_t i = 0; i < in.size(); ++i) {
    switch (g.kind) {
      case GateKind::X:
      case GateKind::CX:
      case GateKind::CCX:
      case GateKind::MCX: {
        const std::uint64_t image =
            controls_hold(i, g.controls) ? i ^ (std::uint64_t{1} << g.targets[0]) : i;
        out[image] = in[i];
        break;
      }
      case GateKind::SWAP: {
        const Qubit a = g.targets[0];
        const Qubit b = g.targets[1];
        std::uint64_t image = i;
        if (bit(i, a) != bit(i, b)) image ^= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        out[image] = in[i];
        break;
      }
      case GateKind::H: {
        const Qubit t = g.targets[0];
        const double r = 1.0 / std::sqrt(2.0);
        const std::uint64_t zero = i & ~(std::uint64_t{1} << t);
        const std::uint64_t one = i | (std::uint64_t{1} << t);
        out[i] = bit(i, t) ? (in[zero] - in[one]) * r : (in[zero] + in[one]) * r;
        break;
      }
      case GateKind::Z: {
        const bool flip = controls_hold(i, g.controls) && bit(i, g.targets[0]);
        out[i] = flip ? -in[i] : in[i];
        break;
      }
      case GateKind::PHASE_FLIP_IF: {
        std::uint64_t v = 0;
        for (std::size_t k = 0; k < g.targets.size(); ++k) v |= std::uint64_t{bit(i, g.targets[k])} << k;
        out[i] = (*g.predicate)(v) ? -in[i] : in[i];
        break;
      }
      default:
        throw DomainError(std::string("macro gate ") + std::string(to_string(g.kind)) +
                          " must be expanded before statevector application");
    }
  }
  std::copy(out.begin(), out.end(), in.begin());
}

}  // namespace qsm::reference
