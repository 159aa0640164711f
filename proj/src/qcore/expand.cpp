#include <algorithm>

#include "qsm/errors.hpp"
#include "qsm/qcore/circuit.hpp"

namespace qsm {

namespace {

void reverse_segment(std::span<const Qubit> reg, std::size_t first, std::size_t count, Phase phase,
                     std::vector<GateOp>& out) {
  for (std::size_t i = 0; i < count / 2; ++i) {
    out.push_back(swap_gate(reg[first + i], reg[first + count - 1 - i]).in_phase(phase));
  }
}

// Right rotation by r as three reversals: the whole register, then the first
// r and the last w - r positions. Two layers of disjoint swaps.
std::vector<GateOp> expand_rotate(const GateOp& g) {
  std::vector<GateOp> out;
  const std::size_t w = g.targets.size();
  const std::size_t r = g.param % w;
  if (r == 0) return out;
  reverse_segment(g.targets, 0, w, g.phase, out);
  reverse_segment(g.targets, 0, r, g.phase, out);
  reverse_segment(g.targets, r, w - r, g.phase, out);
  return out;
}

// One mixed-polarity MCX per (address, set data bit).
std::vector<GateOp> expand_qram(const GateOp& g) {
  std::vector<GateOp> out;
  const auto& table = *g.table;
  for (std::uint64_t addr = 0; addr < table.size(); ++addr) {
    const std::uint64_t cell = table[addr];
    if (cell == 0) continue;
    std::vector<GateOp> negate;
    for (std::size_t b = 0; b < g.sources.size(); ++b) {
      if (!((addr >> b) & 1U)) negate.push_back(x_gate(g.sources[b]).in_phase(g.phase));
    }
    out.insert(out.end(), negate.begin(), negate.end());
    for (std::size_t t = 0; t < g.targets.size(); ++t) {
      if ((cell >> t) & 1U) out.push_back(build_mcx(g.sources, g.targets[t]).in_phase(g.phase));
    }
    out.insert(out.end(), negate.begin(), negate.end());
  }
  return out;
}

// Applies MCX(controls -> target) where each control must read `want`.
void mixed_mcx(const std::vector<std::pair<Qubit, bool>>& controls, Qubit target, Phase phase,
               std::vector<GateOp>& out) {
  std::vector<Qubit> qs;
  for (const auto& [q, want] : controls) {
    if (!want) out.push_back(x_gate(q).in_phase(phase));
    qs.push_back(q);
  }
  out.push_back(build_mcx(qs, target).in_phase(phase));
  for (const auto& [q, want] : controls) {
    if (!want) out.push_back(x_gate(q).in_phase(phase));
  }
}

}  // namespace

std::vector<GateOp> build_increment(std::span<const Qubit> reg, std::span<const Qubit> controls) {
  std::vector<GateOp> out;
  for (std::size_t i = reg.size(); i-- > 0;) {
    std::vector<Qubit> cs(controls.begin(), controls.end());
    cs.insert(cs.end(), reg.begin(), reg.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(build_mcx(std::move(cs), reg[i]));
  }
  return out;
}

// value < k + 1 is a disjunction of mutually exclusive terms, one per set bit i
// of k + 1: value_i = 0 and value_j equals (k + 1)_j above i. XOR-ing the
// terms into the flag therefore XORs their disjunction.
std::vector<GateOp> build_compare_leq(std::span<const Qubit> value, std::uint64_t k, Qubit flag) {
  const std::size_t q = value.size();
  if (q == 0 || q > 63 || (k >> q)) throw DomainError("compare constant does not fit the register");
  std::vector<GateOp> out;
  const std::uint64_t limit = k + 1;
  if (limit >> q) {
    out.push_back(x_gate(flag));
    return out;
  }
  for (std::size_t i = 0; i < q; ++i) {
    if (!((limit >> i) & 1U)) continue;
    std::vector<std::pair<Qubit, bool>> controls{{value[i], false}};
    for (std::size_t j = i + 1; j < q; ++j) controls.emplace_back(value[j], (limit >> j) & 1U);
    mixed_mcx(controls, flag, Phase::other, out);
  }
  return out;
}

// With bound_j ^= value_j the XOR register is zero above the deciding bit;
// value <= bound iff all XOR bits are zero, or the highest differing bit i has
// value_i = 0 (bound_i = 1).
std::vector<GateOp> build_compare_leq(std::span<const Qubit> value, std::span<const Qubit> bound,
                                      Qubit flag) {
  const std::size_t q = value.size();
  if (q == 0 || bound.size() != q) throw DomainError("compare registers must have equal width");
  std::vector<GateOp> out;
  for (std::size_t j = 0; j < q; ++j) out.push_back(cx_gate(value[j], bound[j]));

  std::vector<std::pair<Qubit, bool>> equal;
  for (std::size_t j = 0; j < q; ++j) equal.emplace_back(bound[j], false);
  mixed_mcx(equal, flag, Phase::other, out);

  for (std::size_t i = 0; i < q; ++i) {
    std::vector<std::pair<Qubit, bool>> controls{{value[i], false}, {bound[i], true}};
    for (std::size_t j = i + 1; j < q; ++j) controls.emplace_back(bound[j], false);
    mixed_mcx(controls, flag, Phase::other, out);
  }

  for (std::size_t j = 0; j < q; ++j) out.push_back(cx_gate(value[j], bound[j]));
  return out;
}

std::vector<GateOp> build_gen_or(std::span<const Qubit> sources, Qubit target) {
  std::vector<GateOp> out;
  for (Qubit s : sources) out.push_back(x_gate(s));
  out.push_back(build_mcx({sources.begin(), sources.end()}, target));
  for (Qubit s : sources) out.push_back(x_gate(s));
  out.push_back(x_gate(target));
  return out;
}

std::vector<GateOp> expand(const GateOp& g) {
  std::vector<GateOp> out;
  switch (g.kind) {
    case GateKind::ROTATE:
      return expand_rotate(g);
    case GateKind::QRAM_FETCH:
      return expand_qram(g);
    case GateKind::INCREMENT:
      out = build_increment(g.targets, g.controls);
      break;
    case GateKind::COMPARE_LEQ:
      out = g.bound.empty() ? build_compare_leq(g.sources, g.param, g.targets[0])
                            : build_compare_leq(g.sources, g.bound, g.targets[0]);
      break;
    case GateKind::GEN_OR:
      out = build_gen_or(g.sources, g.targets[0]);
      break;
    default:
      return {g};
  }
  for (auto& e : out) e.phase = g.phase;
  return out;
}

std::vector<GateOp> inverse(const GateOp& g) {
  switch (g.kind) {
    case GateKind::ROTATE: {
      const std::size_t w = g.targets.size();
      GateOp inv = build_rotate(g.targets, (w - g.param % w) % w);
      inv.phase = g.phase;
      return {inv};
    }
    case GateKind::INCREMENT: {
      auto seq = expand(g);
      std::reverse(seq.begin(), seq.end());
      return seq;
    }
    default:
      // Every other kind is an involution (XOR-into-target or a reflection).
      return {g};
  }
}

}  // namespace qsm
