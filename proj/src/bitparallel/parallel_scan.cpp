#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qsm/bitparallel.hpp"
#include "qsm/errors.hpp"
#include "scan_kernels.hpp"

namespace qsm::parallel {

namespace {

constexpr std::size_t kMinChunk = 1 << 14;

int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

// Splits [0, n) into chunks of end positions; chunk c warms up m-1 symbols
// before its first reported end position.
template <class Kernel>
std::vector<Occurrence> chunked(std::size_t n, std::size_t m, int threads, Kernel&& kernel) {
  const int workers = resolve_threads(threads);
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(workers) * 4,
                                                      n / kMinChunk));
  const std::size_t step = (n + chunks - 1) / chunks;
  std::vector<std::vector<Occurrence>> partial(chunks);

#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * step;
    const std::size_t hi = std::min(n, lo + step);
    if (lo >= hi) continue;
    const std::size_t warm = lo >= m - 1 ? lo - (m - 1) : 0;
    kernel(warm, lo, hi, partial[static_cast<std::size_t>(c)]);
  }

  std::size_t total = 0;
  for (const auto& p : partial) total += p.size();
  std::vector<Occurrence> out;
  out.reserve(total);
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::vector<Occurrence> shift_and_search(const Text& text, const Pattern& pattern, int threads) {
  validate(text);
  const MaskTable masks = build_masks(pattern, text.sigma, Polarity::match);
  if (pattern.size() > text.size()) return {};
  return chunked(text.size(), pattern.size(), threads,
                 [&](std::size_t warm, std::size_t lo, std::size_t hi, std::vector<Occurrence>& out) {
                   detail::shift_and_range(text.symbols, masks, warm, lo, hi, out);
                 });
}

std::vector<Occurrence> shift_add_search(const Text& text, const Pattern& pattern, std::size_t k,
                                         int threads) {
  validate(text);
  validate(pattern, text.sigma);
  if (k >= pattern.size()) throw DomainError("Shift-Add needs k < m");
  if (pattern.size() > text.size()) return {};
  const detail::CounterTable table = detail::build_counter_table(pattern, text.sigma);
  return chunked(text.size(), pattern.size(), threads,
                 [&](std::size_t warm, std::size_t lo, std::size_t hi, std::vector<Occurrence>& out) {
                   detail::shift_add_range(text.symbols, table, k, warm, lo, hi, out);
                 });
}

}  // namespace qsm::parallel
