#include <vector>

#include "qsm/bitparallel.hpp"
#include "qsm/errors.hpp"
#include "scan_kernels.hpp"

namespace qsm {
namespace detail {

namespace {

void shift_and_single_word(std::span<const Symbol> text, const MaskTable& masks,
                           std::size_t warmup_from, std::size_t report_from, std::size_t end,
                           std::vector<Occurrence>& out) {
  const std::size_t m = masks.pattern_length();
  const std::uint64_t final_bit = std::uint64_t{1} << (m - 1);
  std::uint64_t d = 0;
  for (std::size_t j = warmup_from; j < end; ++j) {
    d = ((d << 1) | 1U) & masks.word(text[j]);
    if ((d & final_bit) && j >= report_from) out.push_back({j + 1 - m, 0});
  }
}

void shift_and_multi_word(std::span<const Symbol> text, const MaskTable& masks,
                          std::size_t warmup_from, std::size_t report_from, std::size_t end,
                          std::vector<Occurrence>& out) {
  const std::size_t m = masks.pattern_length();
  const std::size_t words = masks.words_per_row();
  const std::size_t final_word = (m - 1) / kWordBits;
  const std::uint64_t final_bit = std::uint64_t{1} << ((m - 1) % kWordBits);
  std::vector<std::uint64_t> d(words, 0);
  for (std::size_t j = warmup_from; j < end; ++j) {
    const auto row = masks.row(text[j]);
    for (std::size_t w = words; w-- > 0;) {
      const std::uint64_t carry_in = w > 0 ? d[w - 1] >> (kWordBits - 1) : 1U;
      d[w] = ((d[w] << 1) | carry_in) & row[w];
    }
    if ((d[final_word] & final_bit) && j >= report_from) out.push_back({j + 1 - m, 0});
  }
}

}  // namespace

void shift_and_range(std::span<const Symbol> text, const MaskTable& masks, std::size_t warmup_from,
                     std::size_t report_from, std::size_t end, std::vector<Occurrence>& out) {
  if (masks.words_per_row() == 1) {
    shift_and_single_word(text, masks, warmup_from, report_from, end, out);
  } else {
    shift_and_multi_word(text, masks, warmup_from, report_from, end, out);
  }
}

}  // namespace detail

std::vector<Occurrence> shift_and_scan(std::span<const Symbol> text, const MaskTable& masks) {
  if (masks.polarity() != Polarity::match) throw DomainError("Shift-And needs match-polarity masks");
  std::vector<Occurrence> out;
  if (masks.pattern_length() == 0 || masks.pattern_length() > text.size()) return out;
  for (Symbol c : text) {
    if (c >= masks.sigma()) throw DomainError("text symbol outside mask alphabet");
  }
  detail::shift_and_range(text, masks, 0, 0, text.size(), out);
  return out;
}

std::vector<Occurrence> shift_and_search(const Text& text, const Pattern& pattern) {
  validate(text);
  const MaskTable masks = build_masks(pattern, text.sigma, Polarity::match);
  return shift_and_scan(text.symbols, masks);
}

std::vector<std::uint64_t> shift_and_trace(const Text& text, const Pattern& pattern) {
  validate(text);
  if (pattern.size() > kWordBits) throw DomainError("shift_and_trace needs m <= 64");
  const MaskTable masks = build_masks(pattern, text.sigma, Polarity::match);
  std::vector<std::uint64_t> trace;
  trace.reserve(text.size());
  std::uint64_t d = 0;
  for (Symbol c : text.symbols) {
    d = ((d << 1) | 1U) & masks.word(c);
    trace.push_back(d);
  }
  return trace;
}

}  // namespace qsm
