#include "qsm/bitparallel.hpp"

#include <string>

#include "qsm/errors.hpp"

namespace qsm {

Text text_from_letters(std::string_view letters, std::size_t sigma) {
  Text text;
  text.sigma = sigma;
  text.symbols.reserve(letters.size());
  for (char ch : letters) text.symbols.push_back(static_cast<Symbol>(ch - 'a'));
  validate(text);
  return text;
}

Pattern pattern_from_letters(std::string_view letters) {
  Pattern pattern;
  for (char ch : letters) pattern.symbols.push_back(static_cast<Symbol>(ch - 'a'));
  return pattern;
}

void validate(const Text& text) {
  if (text.sigma == 0) throw DomainError("text alphabet is empty");
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.symbols[i] >= text.sigma) {
      throw DomainError("text symbol " + std::to_string(text.symbols[i]) + " at index " +
                        std::to_string(i) + " is outside alphabet of size " +
                        std::to_string(text.sigma));
    }
  }
}

void validate(const Pattern& pattern, std::size_t sigma) {
  if (pattern.size() == 0) throw DomainError("pattern must not be empty");
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern.symbols[i] >= sigma) {
      throw DomainError("pattern symbol " + std::to_string(pattern.symbols[i]) + " at index " +
                        std::to_string(i) + " is outside alphabet of size " +
                        std::to_string(sigma));
    }
  }
}

}  // namespace qsm
