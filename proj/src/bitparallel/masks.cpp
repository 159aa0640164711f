#include <bit>

#include "qsm/bitparallel.hpp"
#include "qsm/errors.hpp"

namespace qsm {

MaskTable::MaskTable(std::size_t sigma, std::size_t m, Polarity polarity)
    : sigma_(sigma),
      m_(m),
      words_((m + kWordBits - 1) / kWordBits),
      polarity_(polarity),
      data_(sigma * words_, 0) {}

std::span<const std::uint64_t> MaskTable::row(Symbol c) const {
  if (c >= sigma_) throw DomainError("mask row out of range");
  return {data_.data() + c * words_, words_};
}

std::span<std::uint64_t> MaskTable::row(Symbol c) {
  if (c >= sigma_) throw DomainError("mask row out of range");
  return {data_.data() + c * words_, words_};
}

bool MaskTable::bit(Symbol c, std::size_t i) const {
  return (row(c)[i / kWordBits] >> (i % kWordBits)) & 1U;
}

std::size_t MaskTable::total_popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : data_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

MaskTable build_masks(const Pattern& pattern, std::size_t sigma, Polarity polarity) {
  validate(pattern, sigma);
  const std::size_t m = pattern.size();
  MaskTable table(sigma, m, polarity);
  for (Symbol c = 0; c < sigma; ++c) {
    auto row = table.row(c);
    for (std::size_t i = 0; i < m; ++i) {
      const bool equal = pattern.symbols[i] == c;
      if (equal == (polarity == Polarity::match)) {
        row[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
      }
    }
  }
  return table;
}

}  // namespace qsm
