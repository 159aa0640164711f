#include <bit>
#include <cmath>

#include "qsm/errors.hpp"
#include "qsm/grover.hpp"
#include "qsm/qcore/statevector.hpp"

namespace qsm {

GroverResult simulate_grover(const std::vector<bool>& marked, std::uint64_t t, std::uint64_t seed) {
  const std::uint64_t N = marked.size();
  if (N == 0 || !std::has_single_bit(N)) throw DomainError("Grover domain size must be a power of two");
  std::uint64_t r = 0;
  for (bool v : marked) r += v ? 1 : 0;

  // Every marked index shares amplitude `hit`, every unmarked one `miss`.
  const double n = static_cast<double>(N);
  double hit = 1.0 / std::sqrt(n);
  double miss = hit;
  for (std::uint64_t it = 0; it < t; ++it) {
    hit = -hit;
    const double mean = (static_cast<double>(r) * hit + static_cast<double>(N - r) * miss) / n;
    hit = 2.0 * mean - hit;
    miss = 2.0 * mean - miss;
  }

  GroverResult out;
  out.marked = r;
  out.distribution.resize(N);
  for (std::uint64_t i = 0; i < N; ++i) out.distribution[i] = marked[i] ? hit * hit : miss * miss;
  out.marked_mass = static_cast<double>(r) * hit * hit;
  out.sampled = sample_index(out.distribution, seed);
  return out;
}

GroverResult simulate_grover(const std::function<bool(std::uint64_t)>& predicate, std::uint64_t N,
                             std::uint64_t t, std::uint64_t seed) {
  std::vector<bool> marked(N);
  for (std::uint64_t i = 0; i < N; ++i) marked[i] = predicate(i);
  return simulate_grover(marked, t, seed);
}

}  // namespace qsm
