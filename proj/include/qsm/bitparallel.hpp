#pragma once

// Classical bit-parallel matchers (Shift-And, Shift-Add) and the brute-force
// window oracles every other module is checked against.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qsm {

/// Dense alphabet code in 0..sigma-1. Code sigma is reserved for padding.
using Symbol = std::uint32_t;

inline constexpr std::size_t kWordBits = 64;

struct Text {
  std::vector<Symbol> symbols;
  std::size_t sigma = 0;

  std::size_t size() const noexcept { return symbols.size(); }
};

struct Pattern {
  std::vector<Symbol> symbols;

  std::size_t size() const noexcept { return symbols.size(); }
};

/// Letters 'a', 'b', ... map to codes 0, 1, ... (test and example convenience).
Text text_from_letters(std::string_view letters, std::size_t sigma);
Pattern pattern_from_letters(std::string_view letters);

/// Throws DomainError unless every symbol is < sigma (and, for patterns, m >= 1).
void validate(const Text& text);
void validate(const Pattern& pattern, std::size_t sigma);

enum class Polarity { match, mismatch };

/// sigma rows of ceil(m / 64) words. Row c, bit i is set iff x[i] == c (match)
/// or x[i] != c (mismatch). Bits at positions >= m are always clear.
class MaskTable {
 public:
  MaskTable(std::size_t sigma, std::size_t m, Polarity polarity);

  std::size_t sigma() const noexcept { return sigma_; }
  std::size_t pattern_length() const noexcept { return m_; }
  std::size_t words_per_row() const noexcept { return words_; }
  Polarity polarity() const noexcept { return polarity_; }

  std::span<const std::uint64_t> row(Symbol c) const;
  std::span<std::uint64_t> row(Symbol c);

  /// First word of row c; the whole row when m <= 64.
  std::uint64_t word(Symbol c) const { return row(c)[0]; }
  bool bit(Symbol c, std::size_t i) const;
  std::size_t total_popcount() const;

 private:
  std::size_t sigma_;
  std::size_t m_;
  std::size_t words_;
  Polarity polarity_;
  std::vector<std::uint64_t> data_;
};

MaskTable build_masks(const Pattern& pattern, std::size_t sigma, Polarity polarity);

struct Occurrence {
  std::size_t start = 0;
  std::uint32_t mismatches = 0;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// ---------------------------------------------------------------------------
// Shift-And: d <- ((d << 1) | 1) & b[c], report j - m + 1 when bit m-1 is set.

std::vector<Occurrence> shift_and_search(const Text& text, const Pattern& pattern);

/// Scan with a caller-supplied match-polarity table (any m, single or multi-word).
std::vector<Occurrence> shift_and_scan(std::span<const Symbol> text, const MaskTable& masks);

/// Automaton configuration after each text symbol. Requires m <= 64.
std::vector<std::uint64_t> shift_and_trace(const Text& text, const Pattern& pattern);

// ---------------------------------------------------------------------------
// Shift-Add: one ceil(log2(m+1))-bit mismatch counter per pattern position,
// d <- (d << cell) + bbar[c], report when counter m-1 <= k after m symbols.

/// Counter width in bits: ceil(log2(m + 1)).
std::size_t shift_add_cell_bits(std::size_t m);

std::vector<Occurrence> shift_add_search(const Text& text, const Pattern& pattern, std::size_t k);

/// Counter values (cell 0..m-1) after each text symbol.
std::vector<std::vector<std::uint32_t>> shift_add_trace(const Text& text, const Pattern& pattern);

// ---------------------------------------------------------------------------
// Oracles: naive O(nm) window comparison.

std::vector<Occurrence> brute_force_exact(const Text& text, const Pattern& pattern);
std::vector<Occurrence> brute_force_kmismatch(const Text& text, const Pattern& pattern, std::size_t k);

/// Number of exact occurrences (classical, used for Grover planning).
std::size_t count_occurrences(const Text& text, const Pattern& pattern);

namespace parallel {

/// Chunked OpenMP scans. Each chunk restarts the automaton m-1 symbols early,
/// so the output equals the serial scan exactly. threads <= 0 uses the
/// OpenMP default.
std::vector<Occurrence> shift_and_search(const Text& text, const Pattern& pattern, int threads = 0);
std::vector<Occurrence> shift_add_search(const Text& text, const Pattern& pattern, std::size_t k,
                                         int threads = 0);

}  // namespace parallel

}  // namespace qsm
