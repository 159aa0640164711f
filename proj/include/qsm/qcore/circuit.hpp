#pragma once

// Gate vocabulary, register layout and circuit container.
//
// Qubit q of a register holds bit q of the register's value (little endian),
// so |k> on a width-w register sets qubit i to the i-th least significant bit
// of k.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsm {

using Qubit = std::uint32_t;

struct Register {
  std::string name;
  Qubit offset = 0;
  std::size_t size = 0;

  Qubit operator[](std::size_t i) const { return offset + static_cast<Qubit>(i); }
  std::vector<Qubit> qubits() const;
  /// Qubits [first, first + count) of this register.
  std::vector<Qubit> slice(std::size_t first, std::size_t count) const;
};

class RegisterLayout {
 public:
  /// Appends a register after the existing ones. Names must be unique.
  const Register& add(std::string name, std::size_t size);

  const Register& operator[](std::string_view name) const;
  bool contains(std::string_view name) const;
  std::size_t total_qubits() const noexcept { return total_; }
  const std::vector<Register>& registers() const noexcept { return registers_; }

 private:
  std::vector<Register> registers_;
  std::size_t total_ = 0;
};

enum class GateKind {
  X,
  H,
  Z,
  CX,
  CCX,
  MCX,
  SWAP,
  ROTATE,
  QRAM_FETCH,
  COMPARE_LEQ,
  INCREMENT,
  GEN_OR,
  PHASE_FLIP_IF,
};

std::string_view to_string(GateKind kind);

/// Coarse role of a gate inside an algorithm, used for depth breakdowns.
enum class Phase { init, fetch, transition, rotate, advance, readout, diffusion, other };

std::string_view to_string(Phase phase);

using PhasePredicate = std::function<bool(std::uint64_t)>;

/// One gate. Operand roles by kind:
///   X, H, Z            targets = {t}; Z also accepts controls (multi-controlled Z)
///   CX, CCX, MCX       controls, targets = {t}
///   SWAP               targets = {a, b}
///   ROTATE             targets = register; qubit at position p moves to (p + param) mod width
///   QRAM_FETCH         sources = address, targets = data; data ^= table[address]
///   COMPARE_LEQ        sources = value, targets = {flag}; flag ^= value <= bound,
///                      bound = register `bound` when non-empty, else constant `param`
///   INCREMENT          targets = register, optional controls; value += 1 mod 2^width
///   GEN_OR             sources, targets = {t}; t ^= OR(sources)
///   PHASE_FLIP_IF      targets = register; amplitude *= -1 where predicate(value)
struct GateOp {
  GateKind kind = GateKind::X;
  std::vector<Qubit> controls;
  std::vector<Qubit> targets;
  std::vector<Qubit> sources;
  std::vector<Qubit> bound;
  std::uint64_t param = 0;
  std::shared_ptr<const std::vector<std::uint64_t>> table;
  std::shared_ptr<const PhasePredicate> predicate;
  Phase phase = Phase::other;

  /// Every qubit the gate touches, in role order.
  std::vector<Qubit> operands() const;
  /// True for kinds that map basis states to basis states.
  bool is_classical() const noexcept;
  /// True for the composite kinds that expand() rewrites.
  bool is_macro() const noexcept;

  GateOp& in_phase(Phase p) {
    phase = p;
    return *this;
  }
};

// ---------------------------------------------------------------------------
// Elementary gates.

GateOp x_gate(Qubit target);
GateOp h_gate(Qubit target);
GateOp z_gate(Qubit target, std::vector<Qubit> controls = {});
GateOp cx_gate(Qubit control, Qubit target);
GateOp ccx_gate(Qubit control_a, Qubit control_b, Qubit target);
GateOp swap_gate(Qubit a, Qubit b);

/// target ^= AND(controls). Throws DomainError if target is a control.
GateOp build_mcx(std::vector<Qubit> controls, Qubit target);

// ---------------------------------------------------------------------------
// Composite gates. The *_op builders return one macro gate (cheap to simulate,
// weighted by the depth model); the build_* functions return the equivalent
// elementary gate sequence.

/// Cyclic rotation; depth is a model constant regardless of offset.
GateOp build_rotate(std::span<const Qubit> reg, std::size_t offset);

GateOp qram_fetch_op(std::span<const Qubit> address, std::span<const Qubit> data,
                     std::shared_ptr<const std::vector<std::uint64_t>> table);

GateOp increment_op(std::span<const Qubit> reg, std::vector<Qubit> controls = {});
/// MCX cascade from the most to the least significant qubit.
std::vector<GateOp> build_increment(std::span<const Qubit> reg, std::span<const Qubit> controls = {});

GateOp compare_leq_op(std::span<const Qubit> value, std::uint64_t k, Qubit flag);
GateOp compare_leq_op(std::span<const Qubit> value, std::span<const Qubit> bound, Qubit flag);
/// flag ^= (value <= k); value is restored. Requires k < 2^width.
std::vector<GateOp> build_compare_leq(std::span<const Qubit> value, std::uint64_t k, Qubit flag);
/// flag ^= (value <= bound); both registers are restored.
std::vector<GateOp> build_compare_leq(std::span<const Qubit> value, std::span<const Qubit> bound,
                                      Qubit flag);

GateOp gen_or_op(std::span<const Qubit> sources, Qubit target);
/// X on sources, MCX(sources -> target), X on sources, X on target.
std::vector<GateOp> build_gen_or(std::span<const Qubit> sources, Qubit target);

GateOp phase_flip_if(std::span<const Qubit> reg, PhasePredicate predicate);

/// Elementary decomposition (X, H, Z, CX, CCX, MCX, SWAP, PHASE_FLIP_IF only).
std::vector<GateOp> expand(const GateOp& gate);

/// Gate sequence undoing `gate` on every basis state.
std::vector<GateOp> inverse(const GateOp& gate);

/// Ordered gate list over a register layout. Gates are validated on insert.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}

  const RegisterLayout& layout() const noexcept { return layout_; }
  std::size_t num_qubits() const noexcept { return layout_.total_qubits(); }
  const std::vector<GateOp>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Throws DomainError if an operand is out of range or repeated.
  void add(GateOp gate);
  void add(std::vector<GateOp> gates);

 private:
  RegisterLayout layout_;
  std::vector<GateOp> gates_;
};

/// Same layout with every macro gate replaced by its elementary sequence.
Circuit expanded(const Circuit& circuit);

}  // namespace qsm
