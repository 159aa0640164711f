#pragma once

// Quantum Shift-And and Shift-Add circuits, materialized as gate lists and run
// on the basis-state simulator.
//
// Both circuits process one text symbol per iteration:
//   fetch c = y[j] and b = mask[c] through two QRAM lookups, update the
//   automaton, rotate the history registers, uncompute b and c with the same
//   two lookups, increment j.
//
// Physical and logical positions. Rotations move a qubit at position p to
// p + offset, so the working window (block 0 / cell 0) receives a fresh zero
// block every iteration and older data drifts to higher positions. The layout
// helpers translate text indices into physical positions.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsm/bitparallel.hpp"
#include "qsm/qcore/basis_sim.hpp"
#include "qsm/qcore/circuit.hpp"
#include "qsm/qcore/depth.hpp"

namespace qsm {

inline constexpr std::size_t kDefaultBasisBudget = std::size_t{1} << 20;

struct BuildOptions {
  /// Maximum qubit count accepted by the builders.
  std::size_t budget_qubits = kDefaultBasisBudget;
};

// ---------------------------------------------------------------------------
// Shift-And

struct QsandLayout {
  std::size_t n = 0;
  std::size_t m = 0;
  Register a;  // n blocks of m qubits: configuration history
  Register b;  // transition vector
  Register d;  // automaton configuration
  Register c;  // current symbol
  Register j;  // text address
  Register r;  // output

  /// Physical block holding the configuration after reading y[text_index],
  /// once the run has finished.
  std::size_t block_position(std::size_t text_index) const { return n - 1 - text_index; }
  std::vector<Qubit> block(std::size_t physical) const { return a.slice(physical * m, m); }
};

struct QsandCircuit {
  Circuit circuit;
  QsandLayout regs;
  /// Gate index one past the end of each iteration (size n).
  std::vector<std::size_t> iteration_end;
};

/// Total qubits: n*m + 2m + ceil(log2 sigma) + ceil(log2 n) + 1 (register widths
/// of at least one qubit). Throws ResourceError above the budget.
std::size_t qsand_qubits(std::size_t n, std::size_t m, std::size_t sigma);

QsandCircuit build_qsand(const Text& text, const Pattern& pattern, const BuildOptions& options = {});

struct QsandTrace {
  std::size_t n = 0;
  std::size_t m = 0;
  /// |d> after each iteration: the automaton configuration after reading y[j].
  std::vector<std::uint64_t> configs;
  /// Final history blocks in text order: blocks[j] is logical block A_j.
  std::vector<std::uint64_t> blocks;
  /// Iterations after which |b> or |c> was not all-zero.
  std::vector<std::size_t> uncompute_violations;
  /// Iterations after which the history register held anything other than
  /// the configurations read so far.
  std::vector<std::size_t> ledger_violations;
  bool r = false;
  BasisState final_state;
};

QsandTrace run_qsand(const Text& text, const Pattern& pattern, const BuildOptions& options = {});

/// Start positions j - m + 1 for every block A_j whose bit m-1 is set.
std::vector<std::size_t> occurrence_positions_from_trace(const QsandTrace& trace);

// ---------------------------------------------------------------------------
// Shift-Add

struct QsaddLayout {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t cell_bits = 0;  // ceil(log2(m + 1))
  std::size_t cells = 0;      // n + m - 1
  Register a;  // bound register, initialized to k
  Register b;  // mismatch vector
  Register d;  // counters, `cells` cells of cell_bits qubits
  Register c;
  Register j;
  Register s;  // occurrence flags, n qubits
  Register r;

  std::vector<Qubit> cell(std::size_t physical) const {
    return d.slice((physical % cells) * cell_bits, cell_bits);
  }
  /// Physical flag qubit for the window starting at `start`, after the run.
  std::size_t flag_position(std::size_t start) const { return (n - start) % n; }
};

struct QsaddCircuit {
  Circuit circuit;
  QsaddLayout regs;
  std::vector<std::size_t> iteration_end;
};

std::size_t qsadd_qubits(std::size_t n, std::size_t m, std::size_t sigma);

QsaddCircuit build_qsadd(const Text& text, const Pattern& pattern, std::size_t k,
                         const BuildOptions& options = {});

struct QsaddTrace {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  /// Counter cells 0..m-1 after each iteration (before the history rotation
  /// moved them), i.e. the Shift-Add counters after reading y[j].
  std::vector<std::vector<std::uint32_t>> cells;
  /// flags[start] for start in 0..n-m: window flagged as <= k mismatches.
  std::vector<bool> flags;
  std::vector<std::size_t> uncompute_violations;
  bool r = false;
  BasisState final_state;
};

QsaddTrace run_qsadd(const Text& text, const Pattern& pattern, std::size_t k,
                     const BuildOptions& options = {});

std::vector<std::size_t> occurrence_positions_from_trace(const QsaddTrace& trace);

// ---------------------------------------------------------------------------
// Depth

struct DepthReport {
  std::size_t total_layers = 0;
  std::size_t qubits = 0;
  std::size_t gates = 0;
  DepthSchedule schedule;
};

DepthReport depth_report(const Circuit& circuit, const DepthModel& model);

/// Depth of the Shift-And circuit for an n-symbol text, computed from the
/// depth model without building the circuit. Equals
/// circuit_depth(build_qsand(...).circuit) for the same sizes.
std::size_t qsand_depth(std::size_t n, std::size_t m, std::size_t sigma, const DepthModel& model);

}  // namespace qsm
