#include <gtest/gtest.h>

#include <random>

#include "qsm/bitparallel.hpp"
#include "qsm/errors.hpp"

using namespace qsm;

namespace {

std::vector<std::size_t> starts(const std::vector<Occurrence>& occ) {
  std::vector<std::size_t> out;
  for (const auto& o : occ) out.push_back(o.start);
  return out;
}

Text binary(std::size_t n, std::uint64_t bits) {
  Text t{std::vector<Symbol>(n), 2};
  for (std::size_t i = 0; i < n; ++i) t.symbols[i] = (bits >> i) & 1U;
  return t;
}

Pattern binary_pattern(std::size_t m, std::uint64_t bits) {
  Pattern p{std::vector<Symbol>(m)};
  for (std::size_t i = 0; i < m; ++i) p.symbols[i] = (bits >> i) & 1U;
  return p;
}

Text random_text(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
  Text t{std::vector<Symbol>(n), sigma};
  for (auto& s : t.symbols) s = static_cast<Symbol>(rng() % sigma);
  return t;
}

Pattern random_pattern(std::mt19937_64& rng, std::size_t m, std::size_t sigma) {
  Pattern p{std::vector<Symbol>(m)};
  for (auto& s : p.symbols) s = static_cast<Symbol>(rng() % sigma);
  return p;
}

}  // namespace

TEST(Masks, MatchPolarityExamples) {
  const MaskTable ab = build_masks(pattern_from_letters("ab"), 2, Polarity::match);
  EXPECT_EQ(ab.word(0), 0b01U);
  EXPECT_EQ(ab.word(1), 0b10U);
  const MaskTable aa = build_masks(pattern_from_letters("aa"), 2, Polarity::match);
  EXPECT_EQ(aa.word(0), 0b11U);
  EXPECT_EQ(aa.word(1), 0b00U);
}

TEST(Masks, MismatchPolarityIsComplementWithinM) {
  const MaskTable ab = build_masks(pattern_from_letters("ab"), 2, Polarity::mismatch);
  EXPECT_EQ(ab.word(0), 0b10U);
  EXPECT_EQ(ab.word(1), 0b01U);

  std::mt19937_64 rng(7);
  for (std::size_t m : {1, 5, 63, 64, 65, 130}) {
    const Pattern p = random_pattern(rng, m, 5);
    const MaskTable hit = build_masks(p, 5, Polarity::match);
    const MaskTable miss = build_masks(p, 5, Polarity::mismatch);
    for (Symbol c = 0; c < 5; ++c) {
      for (std::size_t i = 0; i < m; ++i) EXPECT_NE(hit.bit(c, i), miss.bit(c, i));
    }
  }
}

TEST(Masks, PopcountEqualsPatternLength) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 150;
    const std::size_t sigma = 1 + rng() % 30;
    const Pattern p = random_pattern(rng, m, sigma);
    EXPECT_EQ(build_masks(p, sigma, Polarity::match).total_popcount(), m);
  }
}

TEST(Masks, SymbolOutOfRangeThrows) {
  EXPECT_THROW(build_masks(pattern_from_letters("ac"), 2, Polarity::match), DomainError);
  EXPECT_THROW(validate(Pattern{}, 2), DomainError);
  EXPECT_THROW(validate(Text{{0, 3}, 3}), DomainError);
}

TEST(ShiftAnd, Examples) {
  EXPECT_EQ(starts(shift_and_search(text_from_letters("abab", 2), pattern_from_letters("ab"))),
            (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(starts(shift_and_search(text_from_letters("aaaa", 2), pattern_from_letters("aa"))),
            (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(shift_and_search(text_from_letters("bbbb", 2), pattern_from_letters("a")).empty());
  EXPECT_TRUE(shift_and_search(text_from_letters("ab", 3), pattern_from_letters("abc")).empty());
}

TEST(ShiftAnd, PrefixSemanticsExhaustive) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint64_t tb = 0; tb < (1ULL << n); ++tb) {
      const Text text = binary(n, tb);
      for (std::size_t m = 1; m <= 4; ++m) {
        for (std::uint64_t pb = 0; pb < (1ULL << m); ++pb) {
          const Pattern p = binary_pattern(m, pb);
          const auto trace = shift_and_trace(text, p);
          ASSERT_EQ(trace.size(), n);
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < m; ++i) {
              bool prefix = i <= j;
              for (std::size_t q = 0; prefix && q <= i; ++q) prefix = p.symbols[q] == text.symbols[j - i + q];
              ASSERT_EQ(((trace[j] >> i) & 1U) != 0, prefix) << "n=" << n << " j=" << j << " i=" << i;
            }
          }
        }
      }
    }
  }
}

TEST(ShiftAnd, MultiWordMatchesOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 60 + rng() % 140;
    const std::size_t sigma = 2 + rng() % 3;
    const Pattern p = random_pattern(rng, m, sigma);
    Text t = random_text(rng, 400 + rng() % 800, sigma);
    for (int c = 0; c < 3; ++c) {
      const std::size_t at = rng() % (t.size() - m + 1);
      std::copy(p.symbols.begin(), p.symbols.end(), t.symbols.begin() + static_cast<std::ptrdiff_t>(at));
    }
    EXPECT_EQ(shift_and_search(t, p), brute_force_exact(t, p)) << "m=" << m;
  }
}

TEST(ShiftAdd, Examples) {
  const auto r1 = shift_add_search(text_from_letters("abcd", 4), pattern_from_letters("abd"), 1);
  EXPECT_EQ(r1, (std::vector<Occurrence>{{0, 1}}));
  const auto r2 = shift_add_search(text_from_letters("abc", 3), pattern_from_letters("abc"), 0);
  EXPECT_EQ(r2, (std::vector<Occurrence>{{0, 0}}));
  const auto r3 = shift_add_search(text_from_letters("aaa", 2), pattern_from_letters("bb"), 2 - 1);
  EXPECT_TRUE(r3.empty());
  EXPECT_THROW(shift_add_search(text_from_letters("aaa", 2), pattern_from_letters("bb"), 2), DomainError);
}

TEST(ShiftAdd, CellWidth) {
  EXPECT_EQ(shift_add_cell_bits(1), 1U);
  EXPECT_EQ(shift_add_cell_bits(2), 2U);
  EXPECT_EQ(shift_add_cell_bits(3), 2U);
  EXPECT_EQ(shift_add_cell_bits(4), 3U);
  EXPECT_EQ(shift_add_cell_bits(7), 3U);
  EXPECT_EQ(shift_add_cell_bits(8), 4U);
}

TEST(ShiftAdd, CountersAreWindowDistancesAndBounded) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 40;
    const std::size_t sigma = 2 + rng() % 3;
    const Pattern p = random_pattern(rng, m, sigma);
    const Text t = random_text(rng, 1 + rng() % 120, sigma);
    const auto trace = shift_add_trace(t, p);
    ASSERT_EQ(trace.size(), t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
      ASSERT_EQ(trace[j].size(), m);
      for (std::size_t i = 0; i < m; ++i) {
        // Mismatches of x[0..i] against the text ending at j; positions before
        // the text contribute nothing.
        std::uint32_t d = 0;
        for (std::size_t q = 0; q <= i; ++q) {
          if (j + q >= i) d += p.symbols[q] != t.symbols[j + q - i];
        }
        ASSERT_EQ(trace[j][i], d);
        ASSERT_LE(trace[j][i], m);
      }
    }
  }
}

TEST(ShiftAdd, MatchesOracleAndIsMonotoneInK) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t m = 1 + rng() % 90;
    const std::size_t sigma = 2 + rng() % 4;
    const Pattern p = random_pattern(rng, m, sigma);
    const Text t = random_text(rng, m + rng() % 500, sigma);
    std::vector<Occurrence> previous;
    for (std::size_t k = 0; k < m; k += 1 + m / 6) {
      const auto got = shift_add_search(t, p, k);
      ASSERT_EQ(got, brute_force_kmismatch(t, p, k)) << "m=" << m << " k=" << k;
      for (const auto& o : previous) {
        EXPECT_TRUE(std::find_if(got.begin(), got.end(), [&](const Occurrence& g) { return g.start == o.start; }) !=
                    got.end());
      }
      previous = got;
    }
  }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(starts(brute_force_exact(text_from_letters("abab", 2), pattern_from_letters("ab"))),
            (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(starts(brute_force_exact(text_from_letters("a", 1), pattern_from_letters("a"))),
            (std::vector<std::size_t>{0}));
  EXPECT_TRUE(brute_force_exact(text_from_letters("ab", 3), pattern_from_letters("abc")).empty());
  EXPECT_EQ(brute_force_kmismatch(text_from_letters("abcd", 4), pattern_from_letters("abd"), 1),
            (std::vector<Occurrence>{{0, 1}}));
  EXPECT_TRUE(brute_force_kmismatch(text_from_letters("aa", 2), pattern_from_letters("bb"), 1).empty());
  EXPECT_EQ(brute_force_kmismatch(text_from_letters("aaa", 2), pattern_from_letters("bb"), 2),
            (std::vector<Occurrence>{{0, 2}, {1, 2}}));
  EXPECT_EQ(count_occurrences(text_from_letters("aaa", 1), pattern_from_letters("a")), 3U);
  EXPECT_EQ(count_occurrences(text_from_letters("abab", 2), pattern_from_letters("ab")), 2U);
}

TEST(ParallelScan, EqualsSerialOnLargeTexts) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t sigma = 2 + rng() % 3;
    const std::size_t m = 1 + rng() % 100;
    const Pattern p = random_pattern(rng, m, sigma);
    const Text t = random_text(rng, 200000 + rng() % 50000, sigma);
    for (int threads : {1, 2, 4}) {
      EXPECT_EQ(parallel::shift_and_search(t, p, threads), shift_and_search(t, p));
      const std::size_t k = m / 3;
      EXPECT_EQ(parallel::shift_add_search(t, p, k, threads), shift_add_search(t, p, k));
    }
  }
}
