#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "qsm/bitparallel.hpp"
#include "qsm/errors.hpp"
#include "qsm/qcore/depth.hpp"

namespace qsm::detail {

inline std::size_t address_width(std::size_t cells) {
  return std::max<std::size_t>(1, ceil_log2(cells));
}

inline void check_budget(std::size_t required, std::size_t budget, const char* what) {
  if (required > budget) {
    throw ResourceError(std::string(what) + " needs " + std::to_string(required) +
                            " qubits, budget is " + std::to_string(budget),
                        required, budget);
  }
}

inline std::shared_ptr<const std::vector<std::uint64_t>> text_table(const Text& text) {
  return std::make_shared<const std::vector<std::uint64_t>>(text.symbols.begin(),
                                                            text.symbols.end());
}

inline std::shared_ptr<const std::vector<std::uint64_t>> mask_table(const MaskTable& masks) {
  std::vector<std::uint64_t> cells(masks.sigma());
  for (Symbol c = 0; c < masks.sigma(); ++c) cells[c] = masks.word(c);
  return std::make_shared<const std::vector<std::uint64_t>>(std::move(cells));
}

inline void check_inputs(const Text& text, const Pattern& pattern) {
  validate(text);
  validate(pattern, text.sigma);
  if (text.size() == 0) throw DomainError("text must not be empty");
  if (pattern.size() > kWordBits) throw DomainError("circuits support patterns of at most 64 symbols");
}

}  // namespace qsm::detail
