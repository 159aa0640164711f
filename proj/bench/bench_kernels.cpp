// Serial vs OpenMP: chunked Shift-And / Shift-Add scans and statevector gate
// kernels (in-place parallel vs the out-of-place reference).

#include <benchmark/benchmark.h>

#include <random>

#include "qsm/bitparallel.hpp"
#include "qsm/qcore/statevector.hpp"

using namespace qsm;

namespace {

Text make_text(std::size_t n, std::size_t sigma) {
  std::mt19937_64 rng(1);
  Text t{std::vector<Symbol>(n), sigma};
  for (auto& s : t.symbols) s = static_cast<Symbol>(rng() % sigma);
  return t;
}

Pattern make_pattern(std::size_t m, std::size_t sigma) {
  std::mt19937_64 rng(2);
  Pattern p{std::vector<Symbol>(m)};
  for (auto& s : p.symbols) s = static_cast<Symbol>(rng() % sigma);
  return p;
}

const Text& big_text() {
  static const Text text = make_text(std::size_t{1} << 24, 4);
  return text;
}

void BM_ShiftAndSerial(benchmark::State& state) {
  const Text& text = big_text();
  const Pattern p = make_pattern(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(shift_and_search(text, p));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}

void BM_ShiftAndParallel(benchmark::State& state) {
  const Text& text = big_text();
  const Pattern p = make_pattern(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(parallel::shift_and_search(text, p));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}

void BM_ShiftAddSerial(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const Text& text = big_text();
  const Pattern p = make_pattern(m, 4);
  for (auto _ : state) benchmark::DoNotOptimize(shift_add_search(text, p, m / 4));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}

void BM_ShiftAddParallel(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const Text& text = big_text();
  const Pattern p = make_pattern(m, 4);
  for (auto _ : state) benchmark::DoNotOptimize(parallel::shift_add_search(text, p, m / 4));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}

std::vector<GateOp> layer(std::size_t qubits) {
  std::vector<GateOp> gates;
  for (Qubit q = 0; q < qubits; ++q) gates.push_back(h_gate(q));
  for (Qubit q = 0; q + 1 < qubits; ++q) gates.push_back(cx_gate(q, q + 1));
  gates.push_back(build_mcx({0, 1, 2}, static_cast<Qubit>(qubits - 1)));
  return gates;
}

void BM_StatevectorParallel(benchmark::State& state) {
  const std::size_t qubits = static_cast<std::size_t>(state.range(0));
  Statevector sv(qubits);
  const auto gates = layer(qubits);
  for (auto _ : state) {
    for (const auto& g : gates) apply_gate(sv, g);
    benchmark::ClobberMemory();
  }
}

void BM_StatevectorReference(benchmark::State& state) {
  const std::size_t qubits = static_cast<std::size_t>(state.range(0));
  Statevector sv(qubits);
  const auto gates = layer(qubits);
  for (auto _ : state) {
    for (const auto& g : gates) reference::apply_gate(sv, g);
    benchmark::ClobberMemory();
  }
}

}  // namespace

BENCHMARK(BM_ShiftAndSerial)->Arg(8)->Arg(64)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShiftAndParallel)->Arg(8)->Arg(64)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShiftAddSerial)->Arg(8)->Arg(20)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShiftAddParallel)->Arg(8)->Arg(20)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StatevectorParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StatevectorReference)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
