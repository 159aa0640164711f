#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsm/bitparallel.hpp"

namespace qsm::app {

enum class AlphabetPolicy {
  observed,  // dense codes by first occurrence in the text, then the pattern
  raw,       // byte values, sigma = 256
};

struct LoadedInput {
  Text text;
  Pattern pattern;
  /// Byte for each code under the observed policy (empty for raw).
  std::vector<unsigned char> alphabet;
};

/// Throws DomainError for empty text or pattern.
LoadedInput load_input(std::string_view text_bytes, std::string_view pattern_bytes, AlphabetPolicy policy);

/// Text alone; an empty input throws DomainError.
Text load_text(std::string_view bytes, AlphabetPolicy policy);

/// Whole file as bytes. Throws std::runtime_error if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace qsm::app
