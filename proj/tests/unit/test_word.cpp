#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fibdig/word.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace fibdig;

TEST(Word, ParsesAndPrintsPlainDigits) {
  const Word w = Word::parse("0120", 3);
  EXPECT_EQ(w.length(), 4u);
  EXPECT_EQ(w.digits(), (std::vector<int>{0, 1, 2, 0}));
  EXPECT_EQ(w.to_string(), "0120");
  EXPECT_EQ(w.back(), 0);
}

TEST(Word, LargeAlphabetUsesCommas) {
  const Word w = Word::parse("0,11,0", 12);
  EXPECT_EQ(w.digits(), (std::vector<int>{0, 11, 0}));
  EXPECT_EQ(w.to_string(), "0,11,0");
}

TEST(Word, RejectsDigitsOutsideAlphabet) {
  EXPECT_THROW(Word::parse("0130", 3), std::invalid_argument);
  EXPECT_THROW(Word({0, -1}, 2), std::invalid_argument);
  EXPECT_THROW(Word({0}, 1), std::invalid_argument);
}

TEST(Word, SuccessorRule) {
  EXPECT_EQ(admissible_successors(0, 3), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(admissible_successors(1, 3), (std::vector<int>{2}));
  EXPECT_EQ(admissible_successors(2, 3), (std::vector<int>{0}));
  EXPECT_TRUE(is_admissible(Word::parse("0120", 3)));
  EXPECT_TRUE(is_admissible(Word::parse("2012", 3)));
  EXPECT_FALSE(is_admissible(Word::parse("0110", 3)));
  EXPECT_FALSE(is_admissible(Word::parse("011", 2)));
}

TEST(Word, EnumerationMatchesBruteForceFilter) {
  for (int d = 2; d <= 5; ++d) {
    for (int k = 1; k <= 6; ++k) {
      std::vector<std::string> got;
      for (const Word& w : enumerate_words(d, k)) got.push_back(w.to_string());
      EXPECT_EQ(got, oracle::brute_words(d, k)) << "d=" << d << " k=" << k;
    }
  }
}

TEST(Word, EnumerationHonoursCap) {
  EXPECT_NO_THROW(enumerate_words(2, 6, 21));
  EXPECT_THROW(enumerate_words(2, 6, 20), CapExceeded);
}

TEST(FibonacciDigraph, ArcsMatchShiftRule) {
  for (int d = 2; d <= 4; ++d) {
    for (int k = 1; k <= 5; ++k) {
      const Digraph g = build_fibonacci_digraph(d, k);
      std::set<std::pair<std::string, std::string>> arcs;
      for (const Arc& a : g.arcs()) {
        EXPECT_EQ(a.multiplicity, 1u);
        arcs.insert({g.label(a.tail), g.label(a.head)});
      }
      EXPECT_EQ(arcs, oracle::brute_arcs(d, k)) << "d=" << d << " k=" << k;
    }
  }
}

TEST(FibonacciDigraph, F24HasEightVertices) {
  const Digraph g = build_fibonacci_digraph(2, 4);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.labels().front(), "0000");
  EXPECT_EQ(g.labels().back(), "1010");
  EXPECT_EQ(g.multiplicity(*g.index_of("0000"), *g.index_of("0000")), 1u);
  EXPECT_EQ(g.multiplicity(*g.index_of("0101"), *g.index_of("1010")), 1u);
  EXPECT_EQ(g.multiplicity(*g.index_of("1010"), *g.index_of("0101")), 1u);
}

TEST(FibonacciDigraph, OutDegreeDependsOnLastDigit) {
  for (int d = 2; d <= 5; ++d) {
    for (int k = 1; k <= 5; ++k) {
      const Digraph g = build_fibonacci_digraph(d, k);
      for (std::size_t v = 0; v < g.order(); ++v) {
        const bool ends_in_zero = g.label(v).back() == '0';
        EXPECT_EQ(g.out_degree(v), ends_in_zero ? static_cast<std::uint64_t>(d) : 1u) << g.label(v);
      }
    }
  }
}

TEST(DeBruijn, SmallInstance) {
  const Digraph b = build_de_bruijn(2, 3);
  EXPECT_EQ(b.order(), 8u);
  EXPECT_EQ(b.arc_count(), 16u);
  EXPECT_EQ(b.multiplicity(*b.index_of("000"), *b.index_of("000")), 1u);
  EXPECT_EQ(b.multiplicity(*b.index_of("111"), *b.index_of("111")), 1u);
  EXPECT_EQ(b.multiplicity(*b.index_of("011"), *b.index_of("110")), 1u);
  EXPECT_EQ(b.multiplicity(*b.index_of("011"), *b.index_of("100")), 0u);
  EXPECT_THROW(build_de_bruijn(3, 5, 100), CapExceeded);
}

TEST(DeBruijn, EveryVertexHasFullDegree) {
  const Digraph b = build_de_bruijn(3, 3);
  for (std::size_t v = 0; v < b.order(); ++v) {
    EXPECT_EQ(b.out_degree(v), 3u);
    EXPECT_EQ(b.in_degree(v), 3u);
  }
}

TEST(VertexMaps, DigitEmbeddingSendsNonzeroDigitsToTheTop) {
  const Digraph small = build_fibonacci_digraph(2, 3);
  const Digraph big = build_fibonacci_digraph(4, 3);
  const auto map = digit_embedding(2, 4, 3);
  ASSERT_EQ(map.size(), small.order());
  EXPECT_EQ(big.label(map[*small.index_of("010")]), "030");
  EXPECT_EQ(big.label(map[*small.index_of("101")]), "303");
  EXPECT_THROW(digit_embedding(4, 2, 3), std::invalid_argument);
}

TEST(VertexMaps, SuffixAndReversal) {
  const Digraph f = build_fibonacci_digraph(2, 4);
  const Digraph f2 = build_fibonacci_digraph(2, 2);
  const auto suffix = suffix_map(2, 4, 2);
  EXPECT_EQ(f2.label(suffix[*f.index_of("0101")]), "01");
  EXPECT_EQ(f2.label(suffix[*f.index_of("1000")]), "00");
  const auto rev = reversal_map(2, 4);
  EXPECT_EQ(f.label(rev[*f.index_of("0001")]), "1000");
  EXPECT_EQ(f.label(rev[*f.index_of("0101")]), "1010");
}
