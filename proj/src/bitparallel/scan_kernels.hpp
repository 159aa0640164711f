#pragma once

// Range kernels shared by the serial scans and the chunked OpenMP scans.
// A kernel is started at symbol `warmup_from` with an all-zero automaton and
// reports only occurrences whose last symbol lies in [report_from, end).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qsm/bitparallel.hpp"

namespace qsm::detail {

void shift_and_range(std::span<const Symbol> text, const MaskTable& masks, std::size_t warmup_from,
                     std::size_t report_from, std::size_t end, std::vector<Occurrence>& out);

/// Per-symbol counter increments packed for Shift-Add. Cells never straddle a
/// word: each word holds cells_per_word cells of cell_bits bits.
struct CounterTable {
  std::size_t m = 0;
  std::size_t cell_bits = 0;
  std::size_t cells_per_word = 0;
  std::size_t words = 0;
  std::size_t sigma = 0;
  std::vector<std::uint64_t> data;

  std::span<const std::uint64_t> row(Symbol c) const { return {data.data() + c * words, words}; }
};

CounterTable build_counter_table(const Pattern& pattern, std::size_t sigma);

void shift_add_range(std::span<const Symbol> text, const CounterTable& table, std::size_t k,
                     std::size_t warmup_from, std::size_t report_from, std::size_t end,
                     std::vector<Occurrence>& out);

}  // namespace qsm::detail
