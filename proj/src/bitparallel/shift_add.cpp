#include <bit>
#include <vector>

#include "qsm/bitparallel.hpp"
#include "qsm/errors.hpp"
#include "scan_kernels.hpp"

namespace qsm {

std::size_t shift_add_cell_bits(std::size_t m) {
  return static_cast<std::size_t>(std::bit_width(m));  // == ceil(log2(m + 1))
}

namespace detail {

CounterTable build_counter_table(const Pattern& pattern, std::size_t sigma) {
  const MaskTable mismatch = build_masks(pattern, sigma, Polarity::mismatch);
  CounterTable table;
  table.m = pattern.size();
  table.sigma = sigma;
  table.cell_bits = shift_add_cell_bits(table.m);
  table.cells_per_word = kWordBits / table.cell_bits;
  table.words = (table.m + table.cells_per_word - 1) / table.cells_per_word;
  table.data.assign(sigma * table.words, 0);
  for (Symbol c = 0; c < sigma; ++c) {
    for (std::size_t i = 0; i < table.m; ++i) {
      if (mismatch.bit(c, i)) {
        table.data[c * table.words + i / table.cells_per_word] |=
            std::uint64_t{1} << (table.cell_bits * (i % table.cells_per_word));
      }
    }
  }
  return table;
}

namespace {

std::uint64_t low_bits(std::size_t bits) {
  return bits >= kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

void shift_add_single_word(std::span<const Symbol> text, const CounterTable& table, std::size_t k,
                           std::size_t warmup_from, std::size_t report_from, std::size_t end,
                           std::vector<Occurrence>& out) {
  const std::size_t m = table.m;
  const std::size_t cell = table.cell_bits;
  const std::uint64_t keep = low_bits(m * cell);
  const std::uint64_t cell_mask = low_bits(cell);
  const std::size_t final_shift = cell * (m - 1);
  std::uint64_t d = 0;
  for (std::size_t j = warmup_from; j < end; ++j) {
    d = ((d << cell) + table.data[text[j]]) & keep;
    if (j >= report_from && j + 1 >= m) {
      const auto count = static_cast<std::uint32_t>((d >> final_shift) & cell_mask);
      if (count <= k) out.push_back({j + 1 - m, count});
    }
  }
}

void shift_add_multi_word(std::span<const Symbol> text, const CounterTable& table, std::size_t k,
                          std::size_t warmup_from, std::size_t report_from, std::size_t end,
                          std::vector<Occurrence>& out) {
  const std::size_t m = table.m;
  const std::size_t cell = table.cell_bits;
  const std::size_t per_word = table.cells_per_word;
  const std::size_t words = table.words;
  const std::uint64_t cell_mask = low_bits(cell);
  const std::uint64_t word_keep = low_bits(per_word * cell);
  const std::size_t last_cells = m - per_word * (words - 1);
  const std::uint64_t last_keep = low_bits(last_cells * cell);
  const std::size_t top_shift = cell * (per_word - 1);
  const std::size_t final_shift = cell * (last_cells - 1);
  std::vector<std::uint64_t> d(words, 0);
  for (std::size_t j = warmup_from; j < end; ++j) {
    const auto row = table.row(text[j]);
    for (std::size_t w = words; w-- > 0;) {
      // Counters never exceed m < 2^cell, so the add cannot carry across cells.
      const std::uint64_t carry_in = w > 0 ? (d[w - 1] >> top_shift) & cell_mask : 0;
      d[w] = (((d[w] << cell) & word_keep) | carry_in) + row[w];
    }
    d[words - 1] &= last_keep;
    if (j >= report_from && j + 1 >= m) {
      const auto count = static_cast<std::uint32_t>((d[words - 1] >> final_shift) & cell_mask);
      if (count <= k) out.push_back({j + 1 - m, count});
    }
  }
}

}  // namespace

void shift_add_range(std::span<const Symbol> text, const CounterTable& table, std::size_t k,
                     std::size_t warmup_from, std::size_t report_from, std::size_t end,
                     std::vector<Occurrence>& out) {
  if (table.words == 1) {
    shift_add_single_word(text, table, k, warmup_from, report_from, end, out);
  } else {
    shift_add_multi_word(text, table, k, warmup_from, report_from, end, out);
  }
}

}  // namespace detail

std::vector<Occurrence> shift_add_search(const Text& text, const Pattern& pattern, std::size_t k) {
  validate(text);
  validate(pattern, text.sigma);
  if (k >= pattern.size()) throw DomainError("Shift-Add needs k < m");
  std::vector<Occurrence> out;
  if (pattern.size() > text.size()) return out;
  const detail::CounterTable table = detail::build_counter_table(pattern, text.sigma);
  detail::shift_add_range(text.symbols, table, k, 0, 0, text.size(), out);
  return out;
}

std::vector<std::vector<std::uint32_t>> shift_add_trace(const Text& text, const Pattern& pattern) {
  validate(text);
  const detail::CounterTable table = detail::build_counter_table(pattern, text.sigma);
  const std::size_t m = table.m;
  const std::size_t cell = table.cell_bits;
  const std::size_t per_word = table.cells_per_word;
  const std::uint64_t cell_mask = (std::uint64_t{1} << cell) - 1;
  const std::size_t top_shift = cell * (per_word - 1);
  const std::uint64_t word_keep =
      per_word * cell >= kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << (per_word * cell)) - 1;
  const std::size_t last_cells = m - per_word * (table.words - 1);
  const std::uint64_t last_keep = last_cells * cell >= kWordBits
                                      ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << (last_cells * cell)) - 1;

  std::vector<std::uint64_t> d(table.words, 0);
  std::vector<std::vector<std::uint32_t>> trace;
  trace.reserve(text.size());
  for (Symbol c : text.symbols) {
    const auto row = table.row(c);
    for (std::size_t w = table.words; w-- > 0;) {
      const std::uint64_t carry_in = w > 0 ? (d[w - 1] >> top_shift) & cell_mask : 0;
      d[w] = (((d[w] << cell) & word_keep) | carry_in) + row[w];
    }
    d[table.words - 1] &= last_keep;
    std::vector<std::uint32_t> cells(m);
    for (std::size_t i = 0; i < m; ++i) {
      cells[i] = static_cast<std::uint32_t>((d[i / per_word] >> (cell * (i % per_word))) & cell_mask);
    }
    trace.push_back(std::move(cells));
  }
  return trace;
}

}  // namespace qsm
