#include <gtest/gtest.h>

#include "fibdig/digraph.hpp"
#include "fibdig/linedig.hpp"
#include "fibdig/recurrence.hpp"
#include "fibdig/word.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace fibdig;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

// Last-digit vectors of F(5, m) for m = 1..8 (rows n^0..n^7 of the table).
const std::vector<std::vector<BigInt>> kFiveLetterTable{
    big({1, 1, 1, 1, 1}),       big({2, 1, 2, 2, 2}),      big({4, 2, 3, 4, 4}),
    big({8, 4, 6, 7, 8}),       big({16, 8, 12, 14, 15}),  big({31, 16, 24, 28, 30}),
    big({61, 31, 47, 55, 59}),  big({120, 61, 92, 108, 116})};

}  // namespace

TEST(DStepFibonacci, Seeds) {
  for (int d = 2; d <= 6; ++d) {
    EXPECT_EQ(d_step_fibonacci(d, 0), 0);
    EXPECT_EQ(d_step_fibonacci(d, -4), 0);
    EXPECT_EQ(d_step_fibonacci(d, 1), 1);
    EXPECT_EQ(d_step_fibonacci(d, 2), 1);
  }
}

TEST(DStepFibonacci, KnownValues) {
  for (int k = 0; k <= 100; ++k) EXPECT_EQ(d_step_fibonacci(2, k), oracle::fibonacci(k)) << k;
  EXPECT_EQ(d_step_fibonacci(3, 8), 44);
  EXPECT_EQ(d_step_fibonacci(4, 8), 56);
}

TEST(VertexCount, SmallValues) {
  const std::vector<long long> two{2, 3, 5, 8, 13, 21};
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(vertex_count(2, k), two[static_cast<std::size_t>(k - 1)]);
  EXPECT_EQ(vertex_count(3, 4), 17);
  EXPECT_EQ(vertex_count(5, 8), 497);
  EXPECT_EQ(vertex_count(4, 0), 1);
  EXPECT_EQ(vertex_count(4, -2), 1);
  EXPECT_THROW(vertex_count(4, -3), std::invalid_argument);
}

TEST(VertexCount, MatchesEnumerationAndLineDigraphOrder) {
  for (int d = 2; d <= 5; ++d) {
    const IntMatrix a = adjacency_matrix(build_T(d));
    for (int k = 1; k <= 7; ++k) {
      const BigInt n = vertex_count(d, k);
      EXPECT_EQ(n, oracle::brute_words(d, k).size()) << d << "," << k;
      EXPECT_EQ(n, order_formula(a, static_cast<unsigned>(k - 1))) << d << "," << k;
    }
  }
}

TEST(VertexCount, BinaryCaseIsShiftedFibonacci) {
  for (int k = 1; k <= 60; ++k) EXPECT_EQ(vertex_count(2, k), oracle::fibonacci(k + 2));
}

TEST(VertexCount, SeedIdentities) {
  for (int d = 2; d <= 9; ++d) {
    EXPECT_EQ(vertex_count(d, 2), vertex_count(d, 1) + d - 1);
    BigInt sum = 1;
    for (int i = 1; i < d; ++i) sum += vertex_count(d, i);
    EXPECT_EQ(vertex_count(d, d), sum) << d;
  }
}

TEST(RecurrenceMatrix, EqualsBaseAdjacency) {
  for (int d = 2; d <= 8; ++d) EXPECT_EQ(recurrence_matrix(d), adjacency_matrix(build_T(d))) << d;
}

TEST(CountVector, FiveLetterTable) {
  for (int m = 1; m <= 8; ++m) {
    const CountVector cv = count_vector(5, m);
    EXPECT_EQ(cv.length, m);
    EXPECT_EQ(cv.entries, kFiveLetterTable[static_cast<std::size_t>(m - 1)]) << "m=" << m;
  }
  EXPECT_EQ(count_vector(5, 8).total(), 497);
}

TEST(CountVector, MatchesLastDigitHistogram) {
  for (int d = 2; d <= 5; ++d) {
    for (int m = 1; m <= 7; ++m) {
      std::vector<BigInt> hist(static_cast<std::size_t>(d), BigInt(0));
      for (const auto& w : oracle::brute_words(d, m)) ++hist[static_cast<std::size_t>(w.back() - '0')];
      EXPECT_EQ(count_vector(d, m).entries, hist) << d << "," << m;
    }
  }
}

TEST(CountVector, ColumnsObeyTheRecurrence) {
  for (int d = 2; d <= 6; ++d) {
    for (int m = d + 1; m <= 20; ++m) {
      const auto next = count_vector(d, m + 1).entries;
      for (std::size_t j = 0; j < next.size(); ++j) {
        BigInt sum = 0;
        for (int i = m - d + 1; i <= m; ++i) sum += count_vector(d, i).entries[j];
        EXPECT_EQ(next[j], sum) << d << "," << m << "," << j;
      }
    }
  }
}

TEST(ClosedWalks, BinaryValuesAreLucasNumbers) {
  EXPECT_EQ(closed_walk_counts(2, 3, 7), big({2, 1, 3, 4, 7, 11, 18, 29}));
  EXPECT_EQ(closed_walk_counts(2, 1, 12)[12], 322);
}

TEST(ClosedWalks, TernaryValues) {
  EXPECT_EQ(closed_walk_counts(3, 2, 6), big({3, 1, 3, 7, 11, 21, 39}));
}

TEST(ClosedWalks, IndependentOfWordLength) {
  for (int d = 2; d <= 4; ++d) {
    for (int k = 1; k <= 5; ++k) {
      const auto counts = closed_walk_counts(d, k, 10);
      const auto adj = testing_support::to_adj(build_fibonacci_digraph(d, k));
      for (int l = 1; l <= 10; ++l)
        EXPECT_EQ(counts[static_cast<std::size_t>(l)], oracle::closed_walks_dfs(adj, static_cast<std::size_t>(l)))
            << d << "," << k << "," << l;
    }
  }
}

TEST(ClosedWalks, RecurrenceFromSeedWindow) {
  for (int d = 2; d <= 6; ++d) {
    const auto c = closed_walk_counts(d, 1, 30);
    for (int l = d; l < 30; ++l) {
      BigInt sum = 0;
      for (int i = l - d + 1; i <= l; ++i) sum += c[static_cast<std::size_t>(i)];
      EXPECT_EQ(c[static_cast<std::size_t>(l + 1)], sum) << d << "," << l;
    }
  }
}

TEST(TracePowers, ZerothPowerIsOrder) {
  const auto t = trace_powers(adjacency_matrix(build_fibonacci_digraph(2, 4)), 3);
  EXPECT_EQ(t, big({8, 1, 3, 4}));
}

TEST(FibonacciMatrix, Identity) {
  EXPECT_EQ(fib_matrix_identity(2), (IntMatrix{{2, 1}, {1, 1}}));
  EXPECT_EQ(fib_matrix_identity(10), (IntMatrix{{89, 55}, {55, 34}}));
  for (long long k = 2; k <= 30; ++k) {
    const IntMatrix m = fib_matrix_identity(k);
    EXPECT_EQ(m(0, 1), oracle::fibonacci(static_cast<int>(k)));
  }
  EXPECT_THROW(fib_matrix_identity(1), std::invalid_argument);
}

TEST(Binet, RoundsToExactValues) {
  EXPECT_EQ(binet_fibonacci(0), 0);
  EXPECT_EQ(binet_fibonacci(10), 55);
  EXPECT_EQ(binet_fibonacci(70), 190392490709135LL);
  for (int k = 0; k <= 70; ++k) EXPECT_EQ(BigInt(binet_fibonacci(k)), oracle::fibonacci(k)) << k;
  EXPECT_THROW(binet_fibonacci(-1), std::invalid_argument);
}

TEST(Lucas, ClosedFormSmallValues) {
  EXPECT_EQ(lucas_closed_form(0), 2);
  EXPECT_EQ(lucas_closed_form(1), 1);
  EXPECT_EQ(lucas_closed_form(12), 322);
}
