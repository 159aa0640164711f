#include <algorithm>

#include "common.hpp"
#include "qsm/circuits.hpp"

namespace qsm {

std::size_t qsand_qubits(std::size_t n, std::size_t m, std::size_t sigma) {
  return n * m + 2 * m + detail::address_width(sigma) + detail::address_width(n) + 1;
}

QsandCircuit build_qsand(const Text& text, const Pattern& pattern, const BuildOptions& options) {
  detail::check_inputs(text, pattern);
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  detail::check_budget(qsand_qubits(n, m, text.sigma), options.budget_qubits, "QSAnd circuit");

  RegisterLayout layout;
  QsandLayout regs;
  regs.n = n;
  regs.m = m;
  regs.a = layout.add("a", n * m);
  regs.b = layout.add("b", m);
  regs.d = layout.add("d", m);
  regs.c = layout.add("c", detail::address_width(text.sigma));
  regs.j = layout.add("j", detail::address_width(n));
  regs.r = layout.add("r", 1);

  const auto y_table = detail::text_table(text);
  const auto b_table = detail::mask_table(build_masks(pattern, text.sigma, Polarity::match));
  const auto a = regs.a.qubits();
  const auto b = regs.b.qubits();
  const auto c = regs.c.qubits();
  const auto j = regs.j.qubits();
  const auto& d = regs.d;

  QsandCircuit out{Circuit(layout), regs, {}};
  Circuit& circ = out.circuit;
  const GateOp fetch_symbol = qram_fetch_op(j, c, y_table).in_phase(Phase::fetch);
  const GateOp fetch_mask = qram_fetch_op(c, b, b_table).in_phase(Phase::fetch);

  for (std::size_t t = 0; t < n; ++t) {
    circ.add(fetch_symbol);
    circ.add(fetch_mask);
    // Park the previous configuration in the zero window block; d becomes 0.
    for (std::size_t i = 0; i < m; ++i) circ.add(swap_gate(d[i], a[i]).in_phase(Phase::transition));
    // d = ((old << 1) | 1) & b: d[i+1] = old[i] & b[i+1], d[0] = b[0].
    for (std::size_t i = 0; i + 1 < m; ++i) {
      circ.add(ccx_gate(a[i], b[i + 1], d[i + 1]).in_phase(Phase::transition));
    }
    circ.add(cx_gate(b[0], d[0]).in_phase(Phase::transition));
    circ.add(build_rotate(a, m).in_phase(Phase::rotate));
    circ.add(fetch_mask);
    circ.add(fetch_symbol);
    circ.add(increment_op(j).in_phase(Phase::advance));
    out.iteration_end.push_back(circ.size());
  }

  // After n rotations the window is the block parked in iteration 0, which
  // holds the all-zero initial configuration; park the last configuration there.
  for (std::size_t i = 0; i < m; ++i) circ.add(swap_gate(d[i], a[i]).in_phase(Phase::readout));

  std::vector<Qubit> finals;
  finals.reserve(n);
  for (std::size_t p = 0; p < n; ++p) finals.push_back(a[p * m + m - 1]);
  circ.add(gen_or_op(finals, regs.r[0]).in_phase(Phase::readout));
  return out;
}

QsandTrace run_qsand(const Text& text, const Pattern& pattern, const BuildOptions& options) {
  const QsandCircuit built = build_qsand(text, pattern, options);
  const QsandLayout& regs = built.regs;
  const std::size_t n = regs.n;
  const std::size_t m = regs.m;

  QsandTrace trace;
  trace.n = n;
  trace.m = m;
  BasisSimulator sim(BasisState(built.circuit.num_qubits()));
  std::size_t first = 0;
  for (std::size_t t = 0; t < n; ++t) {
    sim.run(built.circuit, first, built.iteration_end[t]);
    first = built.iteration_end[t];
    const BasisState& s = sim.state();
    trace.configs.push_back(s.value(regs.d));
    if (!s.all_zero(regs.b) || !s.all_zero(regs.c)) trace.uncompute_violations.push_back(t);

    // Block parked in iteration u now sits at (t + 1 - u) mod n and holds the
    // configuration after y[u - 1] (zero for u = 0); all other blocks are zero.
    std::vector<std::uint64_t> expected(n, 0);
    for (std::size_t u = 1; u <= t; ++u) expected[(t + 1 - u) % n] = trace.configs[u - 1];
    for (std::size_t p = 0; p < n; ++p) {
      if (s.value(regs.block(p)) != expected[p]) {
        trace.ledger_violations.push_back(t);
        break;
      }
    }
  }
  sim.run(built.circuit, first, built.circuit.size());
  trace.final_state = sim.state();
  trace.blocks.resize(n);
  for (std::size_t jj = 0; jj < n; ++jj) {
    trace.blocks[jj] = trace.final_state.value(regs.block(regs.block_position(jj)));
  }
  trace.r = trace.final_state.get(regs.r, 0);
  return trace;
}

std::vector<std::size_t> occurrence_positions_from_trace(const QsandTrace& trace) {
  std::vector<std::size_t> starts;
  const std::uint64_t final_bit = std::uint64_t{1} << (trace.m - 1);
  for (std::size_t jj = 0; jj < trace.blocks.size(); ++jj) {
    if (trace.blocks[jj] & final_bit) starts.push_back(jj + 1 - trace.m);
  }
  return starts;
}

// Mirrors build_qsand gate by gate with ASAP layering. Qubits that are always
// touched together share one ready time: j, c, the non-window part of a, and
// r; b, d and the window block are tracked per qubit.
std::size_t qsand_depth(std::size_t n, std::size_t m, std::size_t sigma, const DepthModel& model) {
  if (n == 0 || m == 0) throw DomainError("qsand_depth needs n, m >= 1");
  const std::size_t w_symbol = model.qram(n);
  const std::size_t w_mask = model.qram(sigma);
  const std::size_t w_swap = model.weight(swap_gate(0, 1));
  const std::size_t w_ccx = model.weight(ccx_gate(0, 1, 2));
  const std::size_t w_cx = model.weight(cx_gate(0, 1));
  const std::size_t w_rot = model.rotate_cost(n * m);
  const std::size_t w_inc = model.increment(detail::address_width(n));

  std::size_t jr = 0, cr = 0, rest = 0, total = 0;
  std::vector<std::size_t> b(m, 0), d(m, 0), win(m, 0);
  auto finish = [&](std::size_t start, std::size_t weight) {
    total = std::max(total, start + weight);
    return start + weight;
  };
  auto max_of = [](const std::vector<std::size_t>& v) { return *std::max_element(v.begin(), v.end()); };
  auto fetch_mask = [&] {
    const std::size_t e = finish(std::max(cr, max_of(b)), w_mask);
    cr = e;
    std::fill(b.begin(), b.end(), e);
  };
  auto fetch_symbol = [&] {
    const std::size_t e = finish(std::max(jr, cr), w_symbol);
    jr = cr = e;
  };
  auto park = [&] {
    for (std::size_t i = 0; i < m; ++i) d[i] = win[i] = finish(std::max(d[i], win[i]), w_swap);
  };

  for (std::size_t t = 0; t < n; ++t) {
    fetch_symbol();
    fetch_mask();
    park();
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const std::size_t e = finish(std::max({win[i], b[i + 1], d[i + 1]}), w_ccx);
      win[i] = b[i + 1] = d[i + 1] = e;
    }
    b[0] = d[0] = finish(std::max(b[0], d[0]), w_cx);
    const std::size_t e = finish(std::max(max_of(win), n > 1 ? rest : 0), w_rot);
    std::fill(win.begin(), win.end(), e);
    rest = e;
    fetch_mask();
    fetch_symbol();
    jr = finish(jr, w_inc);
  }
  park();
  finish(std::max(win[m - 1], n > 1 ? rest : 0), model.gen_or(n));
  return total;
}

}  // namespace qsm
