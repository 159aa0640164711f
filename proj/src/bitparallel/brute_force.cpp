#include "qsm/bitparallel.hpp"

namespace qsm {

std::vector<Occurrence> brute_force_exact(const Text& text, const Pattern& pattern) {
  std::vector<Occurrence> out;
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  if (m == 0 || m > n) return out;
  for (std::size_t s = 0; s + m <= n; ++s) {
    std::size_t i = 0;
    while (i < m && text.symbols[s + i] == pattern.symbols[i]) ++i;
    if (i == m) out.push_back({s, 0});
  }
  return out;
}

std::vector<Occurrence> brute_force_kmismatch(const Text& text, const Pattern& pattern,
                                              std::size_t k) {
  std::vector<Occurrence> out;
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  if (m == 0 || m > n) return out;
  for (std::size_t s = 0; s + m <= n; ++s) {
    std::uint32_t distance = 0;
    for (std::size_t i = 0; i < m; ++i) distance += text.symbols[s + i] != pattern.symbols[i];
    if (distance <= k) out.push_back({s, distance});
  }
  return out;
}

std::size_t count_occurrences(const Text& text, const Pattern& pattern) {
  return shift_and_search(text, pattern).size();
}

}  // namespace qsm
