#include "common.hpp"
#include "qsm/circuits.hpp"

namespace qsm {

namespace {

std::size_t cells_for(std::size_t n, std::size_t m) { return n + m - 1; }

}  // namespace

std::size_t qsadd_qubits(std::size_t n, std::size_t m, std::size_t sigma) {
  const std::size_t cell_bits = shift_add_cell_bits(m);
  return cell_bits + m + cells_for(n, m) * cell_bits + detail::address_width(sigma) +
         detail::address_width(n) + n + 1;
}

QsaddCircuit build_qsadd(const Text& text, const Pattern& pattern, std::size_t k,
                         const BuildOptions& options) {
  detail::check_inputs(text, pattern);
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  if (k >= m) throw DomainError("k must be smaller than the pattern length");
  detail::check_budget(qsadd_qubits(n, m, text.sigma), options.budget_qubits, "QSAdd circuit");

  RegisterLayout layout;
  QsaddLayout regs;
  regs.n = n;
  regs.m = m;
  regs.k = k;
  regs.cell_bits = shift_add_cell_bits(m);
  regs.cells = cells_for(n, m);
  regs.a = layout.add("a", regs.cell_bits);
  regs.b = layout.add("b", m);
  regs.d = layout.add("d", regs.cells * regs.cell_bits);
  regs.c = layout.add("c", detail::address_width(text.sigma));
  regs.j = layout.add("j", detail::address_width(n));
  regs.s = layout.add("s", n);
  regs.r = layout.add("r", 1);

  const auto y_table = detail::text_table(text);
  const auto b_table = detail::mask_table(build_masks(pattern, text.sigma, Polarity::mismatch));
  const auto a = regs.a.qubits();
  const auto b = regs.b.qubits();
  const auto c = regs.c.qubits();
  const auto j = regs.j.qubits();
  const auto d = regs.d.qubits();
  const auto s = regs.s.qubits();

  QsaddCircuit out{Circuit(layout), regs, {}};
  Circuit& circ = out.circuit;
  for (std::size_t i = 0; i < regs.cell_bits; ++i) {
    if ((k >> i) & 1U) circ.add(x_gate(a[i]).in_phase(Phase::init));
  }

  const GateOp fetch_symbol = qram_fetch_op(j, c, y_table).in_phase(Phase::fetch);
  const GateOp fetch_mask = qram_fetch_op(c, b, b_table).in_phase(Phase::fetch);
  const std::vector<Qubit> last_cell = regs.cell(m - 1);

  for (std::size_t t = 0; t < n; ++t) {
    circ.add(fetch_symbol);
    circ.add(fetch_mask);
    for (std::size_t i = 0; i < m; ++i) {
      circ.add(increment_op(regs.cell(i), {b[i]}).in_phase(Phase::transition));
    }
    // Cell m-1 only covers a full window once m symbols have been read.
    if (t + 1 >= m) circ.add(compare_leq_op(last_cell, a, s[m - 1]).in_phase(Phase::transition));
    circ.add(build_rotate(d, regs.cell_bits).in_phase(Phase::rotate));
    circ.add(build_rotate(s, 1).in_phase(Phase::rotate));
    circ.add(fetch_mask);
    circ.add(fetch_symbol);
    circ.add(increment_op(j).in_phase(Phase::advance));
    out.iteration_end.push_back(circ.size());
  }
  circ.add(gen_or_op(s, regs.r[0]).in_phase(Phase::readout));
  return out;
}

QsaddTrace run_qsadd(const Text& text, const Pattern& pattern, std::size_t k,
                     const BuildOptions& options) {
  const QsaddCircuit built = build_qsadd(text, pattern, k, options);
  const QsaddLayout& regs = built.regs;

  QsaddTrace trace;
  trace.n = regs.n;
  trace.m = regs.m;
  trace.k = k;
  BasisSimulator sim(BasisState(built.circuit.num_qubits()));
  std::size_t first = 0;
  for (std::size_t t = 0; t < regs.n; ++t) {
    sim.run(built.circuit, first, built.iteration_end[t]);
    first = built.iteration_end[t];
    const BasisState& st = sim.state();
    if (!st.all_zero(regs.b) || !st.all_zero(regs.c)) trace.uncompute_violations.push_back(t);
    // The rotation already moved logical cell i to physical i + 1.
    std::vector<std::uint32_t> row(regs.m);
    for (std::size_t i = 0; i < regs.m; ++i) {
      row[i] = static_cast<std::uint32_t>(st.value(regs.cell(i + 1)));
    }
    trace.cells.push_back(std::move(row));
  }
  sim.run(built.circuit, first, built.circuit.size());
  trace.final_state = sim.state();
  if (regs.n >= regs.m) {
    for (std::size_t start = 0; start + regs.m <= regs.n; ++start) {
      trace.flags.push_back(trace.final_state.get(regs.s, regs.flag_position(start)));
    }
  }
  trace.r = trace.final_state.get(regs.r, 0);
  return trace;
}

std::vector<std::size_t> occurrence_positions_from_trace(const QsaddTrace& trace) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < trace.flags.size(); ++i) {
    if (trace.flags[i]) starts.push_back(i);
  }
  return starts;
}

}  // namespace qsm
