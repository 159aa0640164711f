#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "qsm/app/regression.hpp"
#include "qsm/app/selftest.hpp"
#include "qsm/circuits.hpp"
#include "qsm/grover.hpp"
#include "qsm/qcore/statevector.hpp"

namespace qsm::app {

namespace {

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Text random_text(Rng& rng, std::size_t n, std::size_t sigma) {
  Text t;
  t.sigma = sigma;
  t.symbols.resize(n);
  for (auto& s : t.symbols) s = static_cast<Symbol>(uniform(rng, 0, sigma - 1));
  return t;
}

Pattern random_pattern(Rng& rng, std::size_t m, std::size_t sigma) {
  Pattern p;
  p.symbols.resize(m);
  for (auto& s : p.symbols) s = static_cast<Symbol>(uniform(rng, 0, sigma - 1));
  return p;
}

// Copies the pattern into the text at a few places, with up to `noise`
// substitutions each, so random instances also contain matches.
void plant(Rng& rng, Text& text, const Pattern& pattern, std::size_t copies, std::size_t noise) {
  const std::size_t m = pattern.size();
  if (m > text.size()) return;
  for (std::size_t c = 0; c < copies; ++c) {
    const std::size_t at = uniform(rng, 0, text.size() - m);
    std::copy(pattern.symbols.begin(), pattern.symbols.end(), text.symbols.begin() + static_cast<std::ptrdiff_t>(at));
    const std::size_t flips = noise == 0 ? 0 : uniform(rng, 0, noise);
    for (std::size_t f = 0; f < flips; ++f) {
      text.symbols[at + uniform(rng, 0, m - 1)] = static_cast<Symbol>(uniform(rng, 0, text.sigma - 1));
    }
  }
}

Text binary_text(std::size_t n, std::uint64_t bits) {
  Text t;
  t.sigma = 2;
  t.symbols.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.symbols[i] = static_cast<Symbol>((bits >> i) & 1U);
  return t;
}

Pattern binary_pattern(std::size_t m, std::uint64_t bits) {
  Pattern p;
  p.symbols.resize(m);
  for (std::size_t i = 0; i < m; ++i) p.symbols[i] = static_cast<Symbol>((bits >> i) & 1U);
  return p;
}

std::string describe(const Text& text, const Pattern& pattern) {
  std::ostringstream os;
  os << "sigma=" << text.sigma << " n=" << text.size() << " text=";
  for (std::size_t i = 0; i < std::min<std::size_t>(text.size(), 24); ++i) os << text.symbols[i] << ' ';
  if (text.size() > 24) os << "... ";
  os << "pattern=";
  for (Symbol s : pattern.symbols) os << s << ' ';
  return os.str();
}

std::vector<std::size_t> starts_of(const std::vector<Occurrence>& occ) {
  std::vector<std::size_t> out;
  out.reserve(occ.size());
  for (const auto& o : occ) out.push_back(o.start);
  return out;
}

class Tally {
 public:
  explicit Tally(CheckResult& result) : result_(result) {}

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (ok) return;
    ++result_.failures;
    if (result_.detail.empty()) result_.detail = what;
  }

 private:
  CheckResult& result_;
};

CheckResult start(int criterion, std::string name) {
  CheckResult r;
  r.criterion = criterion;
  r.name = std::move(name);
  return r;
}

void finish(CheckResult& r, Clock::time_point t0) {
  r.passed = r.failures == 0 && r.cases > 0;
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Occurrence> exact_search(const Text& text, const Pattern& pattern, bool fault) {
  if (!fault) return shift_and_search(text, pattern);
  Pattern shifted = pattern;
  std::rotate(shifted.symbols.begin(), shifted.symbols.begin() + 1, shifted.symbols.end());
  return shift_and_scan(text.symbols, build_masks(shifted, text.sigma, Polarity::match));
}

void compare_classical(Tally& tally, const Text& text, const Pattern& pattern, bool fault, bool parallel) {
  const auto exact = brute_force_exact(text, pattern);
  tally.expect(exact_search(text, pattern, fault) == exact, "shift-and differs: " + describe(text, pattern));
  if (parallel) {
    tally.expect(parallel::shift_and_search(text, pattern) == exact,
                 "parallel shift-and differs: " + describe(text, pattern));
  }
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    const auto oracle = brute_force_kmismatch(text, pattern, k);
    tally.expect(shift_add_search(text, pattern, k) == oracle,
                 "shift-add differs at k=" + std::to_string(k) + ": " + describe(text, pattern));
    if (parallel) {
      tally.expect(parallel::shift_add_search(text, pattern, k) == oracle,
                   "parallel shift-add differs: " + describe(text, pattern));
    }
  }
}

struct CircuitTallies {
  CheckResult qsand = start(2, "QSAnd strong equivalence");
  CheckResult qsadd = start(3, "QSAdd strong equivalence");
  CheckResult uncompute = start(4, "uncompute invariant");
};

void compare_qsand(CircuitTallies& t, const Text& text, const Pattern& pattern) {
  Tally eq(t.qsand);
  Tally un(t.uncompute);
  const QsandTrace trace = run_qsand(text, pattern);
  const auto classical = shift_and_trace(text, pattern);
  const std::uint64_t keep = pattern.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pattern.size()) - 1;
  bool same = trace.configs.size() == classical.size() && trace.blocks.size() == classical.size();
  for (std::size_t j = 0; same && j < classical.size(); ++j) {
    same = trace.configs[j] == (classical[j] & keep) && trace.blocks[j] == (classical[j] & keep);
  }
  eq.expect(same, "QSAnd trace differs: " + describe(text, pattern));
  eq.expect(trace.ledger_violations.empty(), "QSAnd history ledger broken: " + describe(text, pattern));
  const auto oracle = starts_of(brute_force_exact(text, pattern));
  eq.expect(occurrence_positions_from_trace(trace) == oracle, "QSAnd positions differ: " + describe(text, pattern));
  eq.expect(trace.r == !oracle.empty(), "QSAnd r differs: " + describe(text, pattern));
  un.expect(trace.uncompute_violations.empty(), "QSAnd b/c not clean: " + describe(text, pattern));
}

void compare_qsadd(CircuitTallies& t, const Text& text, const Pattern& pattern, std::size_t k) {
  Tally eq(t.qsadd);
  Tally un(t.uncompute);
  const QsaddTrace trace = run_qsadd(text, pattern, k);
  const std::string where = "k=" + std::to_string(k) + " " + describe(text, pattern);
  eq.expect(trace.cells == shift_add_trace(text, pattern), "QSAdd counters differ: " + where);
  const auto oracle = starts_of(brute_force_kmismatch(text, pattern, k));
  eq.expect(occurrence_positions_from_trace(trace) == oracle, "QSAdd flags differ: " + where);
  eq.expect(trace.r == !oracle.empty(), "QSAdd r differs: " + where);
  un.expect(trace.uncompute_violations.empty(), "QSAdd b/c not clean: " + where);
}

// Random reversible-classical circuit on `qubits` qubits using every
// classical gate kind on disjoint operand sets.
Circuit random_classical_circuit(Rng& rng, std::size_t qubits, std::size_t gates) {
  RegisterLayout layout;
  layout.add("q", qubits);
  Circuit circuit(layout);
  std::vector<Qubit> pool(qubits);
  std::iota(pool.begin(), pool.end(), Qubit{0});
  for (std::size_t g = 0; g < gates; ++g) {
    std::shuffle(pool.begin(), pool.end(), rng);
    auto take = [&, used = std::size_t{0}](std::size_t count) mutable {
      std::vector<Qubit> out(pool.begin() + static_cast<std::ptrdiff_t>(used),
                             pool.begin() + static_cast<std::ptrdiff_t>(used + count));
      used += count;
      return out;
    };
    switch (uniform(rng, 0, 10)) {
      case 0:
        circuit.add(x_gate(take(1)[0]));
        break;
      case 1: {
        const auto q = take(2);
        circuit.add(cx_gate(q[0], q[1]));
        break;
      }
      case 2: {
        const auto q = take(3);
        circuit.add(ccx_gate(q[0], q[1], q[2]));
        break;
      }
      case 3: {
        const auto c = take(uniform(rng, 0, 5));
        circuit.add(build_mcx(c, take(1)[0]));
        break;
      }
      case 4: {
        const auto q = take(2);
        circuit.add(swap_gate(q[0], q[1]));
        break;
      }
      case 5: {
        const auto reg = take(uniform(rng, 1, 8));
        circuit.add(build_rotate(reg, uniform(rng, 0, 2 * reg.size())));
        break;
      }
      case 6: {
        const std::size_t aw = uniform(rng, 1, 3);
        const std::size_t dw = uniform(rng, 1, 4);
        const auto addr = take(aw);
        const auto data = take(dw);
        auto table = std::make_shared<std::vector<std::uint64_t>>(uniform(rng, 1, std::size_t{1} << aw));
        for (auto& v : *table) v = uniform(rng, 0, (std::size_t{1} << dw) - 1);
        circuit.add(qram_fetch_op(addr, data, table));
        break;
      }
      case 7: {
        const auto reg = take(uniform(rng, 1, 5));
        circuit.add(increment_op(reg, take(uniform(rng, 0, 2))));
        break;
      }
      case 8: {
        const std::size_t w = uniform(rng, 1, 4);
        const auto value = take(w);
        circuit.add(compare_leq_op(value, uniform(rng, 0, (std::size_t{1} << w) - 1), take(1)[0]));
        break;
      }
      case 9: {
        const std::size_t w = uniform(rng, 1, 4);
        const auto value = take(w);
        const auto bound = take(w);
        circuit.add(compare_leq_op(value, bound, take(1)[0]));
        break;
      }
      default: {
        const auto src = take(uniform(rng, 1, 6));
        circuit.add(gen_or_op(src, take(1)[0]));
        break;
      }
    }
  }
  return circuit;
}

bool agrees(const Circuit& circuit, std::uint64_t input, Execution mode) {
  const std::size_t q = circuit.num_qubits();
  const BasisState expect = run_basis(circuit, BasisState::from_index(q, input));
  const Statevector sv = run_statevector(circuit, Statevector::basis(q, input), mode);
  const std::uint64_t target = expect.to_index();
  const auto amps = sv.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (amps[i] != (i == target ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0})) return false;
  }
  return true;
}

}  // namespace

CheckResult check_classical_equivalence(const SelftestOptions& options) {
  const auto t0 = Clock::now();
  CheckResult result = start(1, "classical oracle equivalence");
  Tally tally(result);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint64_t tb = 0; tb < (std::uint64_t{1} << n); ++tb) {
      const Text text = binary_text(n, tb);
      for (std::size_t m = 1; m <= 4; ++m) {
        for (std::uint64_t pb = 0; pb < (std::uint64_t{1} << m); ++pb) {
          compare_classical(tally, text, binary_pattern(m, pb), options.inject_mask_fault, false);
        }
      }
    }
  }
  Rng rng(options.seed);
  constexpr std::size_t kSigmas[] = {2, 4, 26};
  for (std::size_t i = 0; i < 10000; ++i) {
    const std::size_t n = uniform(rng, 1, 4096);
    const std::size_t sigma = kSigmas[uniform(rng, 0, 2)];
    const std::size_t m = uniform(rng, 1, std::min<std::size_t>(n, 72));
    Text text = random_text(rng, n, sigma);
    const Pattern pattern = random_pattern(rng, m, sigma);
    plant(rng, text, pattern, uniform(rng, 0, 3), m / 4);
    const auto exact = brute_force_exact(text, pattern);
    tally.expect(exact_search(text, pattern, options.inject_mask_fault) == exact,
                 "shift-and differs: " + describe(text, pattern));
    const std::size_t k = uniform(rng, 0, m - 1);
    tally.expect(shift_add_search(text, pattern, k) == brute_force_kmismatch(text, pattern, k),
                 "shift-add differs at k=" + std::to_string(k) + ": " + describe(text, pattern));
    if (i % 16 == 0) {
      tally.expect(parallel::shift_and_search(text, pattern) == exact,
                   "parallel shift-and differs: " + describe(text, pattern));
    }
  }
  finish(result, t0);
  return result;
}

std::vector<CheckResult> check_circuit_equivalence(const SelftestOptions& options) {
  const auto t0 = Clock::now();
  CircuitTallies t;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t tb = 0; tb < (std::uint64_t{1} << n); ++tb) {
      const Text text = binary_text(n, tb);
      for (std::size_t m = 1; m <= 3; ++m) {
        for (std::uint64_t pb = 0; pb < (std::uint64_t{1} << m); ++pb) {
          const Pattern pattern = binary_pattern(m, pb);
          compare_qsand(t, text, pattern);
          for (std::size_t k = 0; k < m; ++k) compare_qsadd(t, text, pattern, k);
        }
      }
    }
  }
  Rng rng(options.seed ^ 0xC1C1C1C1ULL);
  for (std::size_t i = 0; i < 1000; ++i) {
    const std::size_t n = uniform(rng, 1, 64);
    const std::size_t sigma = uniform(rng, 0, 1) ? 2 : 4;
    const std::size_t m = uniform(rng, 1, std::min<std::size_t>(n, 8));
    Text text = random_text(rng, n, sigma);
    const Pattern pattern = random_pattern(rng, m, sigma);
    plant(rng, text, pattern, uniform(rng, 0, 2), 1);
    compare_qsand(t, text, pattern);
    compare_qsadd(t, text, pattern, uniform(rng, 0, m - 1));
  }
  std::vector<CheckResult> out{t.qsand, t.qsadd, t.uncompute};
  for (auto& r : out) finish(r, t0);
  return out;
}

CheckResult check_cross_simulator(const SelftestOptions& options) {
  const auto t0 = Clock::now();
  CheckResult result = start(5, "cross-simulator agreement");
  Tally tally(result);
  Rng rng(options.seed ^ 0x5151ULL);
  constexpr std::size_t kInputs = 1000;
  for (std::size_t i = 0; i < kInputs; ++i) {
    Circuit circuit;
    std::string label;
    switch (i % 4) {
      case 0: {
        const Text text = random_text(rng, 3, 2);
        circuit = build_qsand(text, random_pattern(rng, 2, 2)).circuit;
        label = "QSAnd n=3 m=2";
        break;
      }
      case 1: {
        const Text text = random_text(rng, 1, 2);
        circuit = build_qsadd(text, random_pattern(rng, 2, 2), uniform(rng, 0, 1)).circuit;
        label = "QSAdd n=1 m=2";
        break;
      }
      case 2: {
        const Text text = random_text(rng, 3, 3);
        circuit = build_qsadd(text, random_pattern(rng, 1, 3), 0).circuit;
        label = "QSAdd n=3 m=1";
        break;
      }
      default:
        circuit = random_classical_circuit(rng, 14, 24);
        label = "random classical circuit";
        break;
    }
    const std::uint64_t input = uniform(rng, 0, (std::size_t{1} << circuit.num_qubits()) - 1);
    const Execution mode = (i / 4) % 2 == 0 ? Execution::parallel : Execution::serial_reference;
    tally.expect(circuit.num_qubits() <= 14 && agrees(circuit, input, mode),
                 label + " disagrees on input " + std::to_string(input));
  }
  finish(result, t0);
  return result;
}

CheckResult check_grover_exactness(const SelftestOptions& options) {
  const auto t0 = Clock::now();
  CheckResult result = start(6, "Grover exactness");
  Tally tally(result);
  {
    std::vector<bool> marked(4, false);
    marked[2] = true;
    const GroverResult g = simulate_grover(marked, 1, options.seed);
    tally.expect(g.marked_mass == 1.0 && g.distribution[2] == 1.0 && g.sampled == 2,
                 "N=4 r=1 t=1 is not exactly 1.0");
  }
  Rng rng(options.seed ^ 0x6A09E667ULL);
  for (std::size_t e = 1; e <= 12; ++e) {
    const std::uint64_t N = std::uint64_t{1} << e;
    for (std::size_t c = 0; c < 64; ++c) {
      std::uint64_t r = 0;
      switch (c % 4) {
        case 0: r = uniform(rng, 0, N); break;
        case 1: r = 1; break;
        case 2: r = N; break;
        default: r = uniform(rng, 1, std::max<std::uint64_t>(1, N / 8)); break;
      }
      const std::uint64_t t = c < 4 ? (c % 2 == 0 ? 0 : 200) : uniform(rng, 0, 200);
      std::vector<bool> marked(N, false);
      std::vector<std::uint64_t> idx(N);
      std::iota(idx.begin(), idx.end(), std::uint64_t{0});
      std::shuffle(idx.begin(), idx.end(), rng);
      for (std::uint64_t i = 0; i < r; ++i) marked[idx[i]] = true;
      const GroverResult g = simulate_grover(marked, t, rng());
      const double expected = success_probability(N, r, t);
      const std::string where = "N=" + std::to_string(N) + " r=" + std::to_string(r) + " t=" + std::to_string(t);
      tally.expect(std::abs(g.marked_mass - expected) <= 1e-12, "marked mass off closed form at " + where);
      double total = 0.0;
      double first_hit = -1.0;
      bool uniform_hits = true;
      for (std::uint64_t i = 0; i < N; ++i) {
        total += g.distribution[i];
        if (!marked[i]) continue;
        if (first_hit < 0) first_hit = g.distribution[i];
        uniform_hits = uniform_hits && g.distribution[i] == first_hit;
      }
      tally.expect(std::abs(total - 1.0) <= 1e-12, "distribution not normalized at " + where);
      tally.expect(uniform_hits, "marked probabilities not uniform at " + where);
    }
  }
  finish(result, t0);
  return result;
}

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
  std::vector<CheckResult> out;
  out.push_back(check_classical_equivalence(options));
  for (auto& r : check_circuit_equivalence(options)) out.push_back(std::move(r));
  out.push_back(check_cross_simulator(options));
  out.push_back(check_grover_exactness(options));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool has_two_point_domain(std::size_t n, std::size_t m) {
  const BlockPlan plan = plan_blocks(n, m, default_block_size(n, m));
  return next_pow2(n - m + 1) == 2 || plan.N == 2 || next_pow2(plan.stride) == 2;
}

}  // namespace

CheckResult check_end_to_end(std::uint64_t seed, std::size_t planted, std::size_t absent) {
  const auto t0 = Clock::now();
  CheckResult result = start(7, "end-to-end soundness and completeness");
  Tally tally(result);
  Rng rng(seed);
  constexpr std::size_t kSigma = 4;
  for (std::size_t i = 0; i < planted; ++i) {
    std::size_t n = 0, m = 0;
    do {
      m = uniform(rng, 4, 8);
      n = uniform(rng, m, 256);
    } while (has_two_point_domain(n, m));
    const Pattern pattern = random_pattern(rng, m, kSigma);
    const std::size_t j = uniform(rng, 0, n - m);
    Text text;
    do {
      text = random_text(rng, n, kSigma);
      std::copy(pattern.symbols.begin(), pattern.symbols.end(), text.symbols.begin() + static_cast<std::ptrdiff_t>(j));
    } while (count_occurrences(text, pattern) != 1);

    ProcedureOptions opts;
    opts.seed = rng();
    const std::string where = describe(text, pattern) + " planted at " + std::to_string(j);
    const MatchReport a = procedure_a(text, pattern, opts);
    tally.expect(a.found && a.verified && a.position == j, "procedure A missed: " + where);
    tally.expect(a.success_probability >= 0.8, "procedure A success mass below 0.8: " + where);
    const ProcedureBReport b = procedure_b(text, pattern, std::nullopt, opts);
    tally.expect(b.result.found && b.result.verified && b.result.position == j, "procedure B missed: " + where);
    tally.expect(b.blocks.success_probability >= 0.8 && b.refine && b.refine->success_probability >= 0.8 &&
                     b.result.success_probability >= 0.8,
                 "procedure B success mass below 0.8: " + where);
  }
  for (std::size_t i = 0; i < absent; ++i) {
    const std::size_t m = uniform(rng, 4, 8);
    const std::size_t n = uniform(rng, m, 256);
    const Text text = random_text(rng, n, kSigma);
    Pattern pattern;
    do {
      pattern = random_pattern(rng, m, kSigma);
    } while (count_occurrences(text, pattern) != 0);
    ProcedureOptions opts;
    opts.seed = rng();
    const std::string where = describe(text, pattern);
    tally.expect(!procedure_a(text, pattern, opts).found, "procedure A false positive: " + where);
    tally.expect(!procedure_b(text, pattern, std::nullopt, opts).result.found, "procedure B false positive: " + where);
  }
  finish(result, t0);
  return result;
}

CheckResult check_block_coverage(std::size_t max_n) {
  const auto t0 = Clock::now();
  CheckResult result = start(8, "block coverage");
  Tally tally(result);
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      for (std::size_t K = m; K <= n; ++K) {
        const BlockPlan plan = plan_blocks(n, m, K);
        for (std::size_t j = 0; j + m <= n; ++j) {
          bool covered = false;
          for (std::size_t i = 0; i < plan.count() && !covered; ++i) {
            covered = plan.starts[i] <= j && j + m <= plan.starts[i] + K;
          }
          tally.expect(covered, "window " + std::to_string(j) + " orphaned for n=" + std::to_string(n) +
                                    " m=" + std::to_string(m) + " K=" + std::to_string(K));
        }
      }
    }
  }
  finish(result, t0);
  return result;
}

ScalingFit depth_scaling_slopes(std::size_t min_exp, std::size_t max_exp) {
  constexpr std::size_t kM = 4;
  constexpr std::size_t kSigma = 2;
  const DepthModel model;
  std::vector<double> x, full, a, b;
  for (std::size_t e = min_exp; e <= max_exp; ++e) {
    const std::size_t n = std::size_t{1} << e;
    const DepthScanRow row = depth_totals(n, kM, default_block_size(n, kM), kSigma, model);
    x.push_back(static_cast<double>(n));
    full.push_back(static_cast<double>(row.qsand_full));
    a.push_back(static_cast<double>(row.proc_a));
    b.push_back(static_cast<double>(row.proc_b));
  }
  return {loglog_slope(x, full), loglog_slope(x, a), loglog_slope(x, b)};
}

}  // namespace qsm::app
