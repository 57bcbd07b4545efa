#pragma once

// Exact linear recurrences around F(d,k): d-step Fibonacci numbers, vertex
// counts N(d,k), last-digit count vectors, and closed-walk counts.

#include <cstdint>
#include <vector>

#include "fibdig/bigint.hpp"
#include "fibdig/int_matrix.hpp"

namespace fibdig {

/// F_k^{(d)} with F_k = 0 for k <= 0 and F_1 = F_2 = 1.
BigInt d_step_fibonacci(int d, long long k);

/// N(d,k) from the seeds N(d,i) = 1 for 2-d <= i <= 0 and N(d,1) = d.
/// Seed indices k in [2-d, 0] return 1; anything below is rejected.
BigInt vertex_count(int d, long long k);

/// d x d matrix with first row all ones, row i (1 <= i < d) the unit vector
/// e_{(i+1) mod d}. Equal to the adjacency matrix of T_d.
IntMatrix recurrence_matrix(int d);

/// Number of admissible words of a given length, split by last digit.
struct CountVector {
  int d = 0;
  /// Word length. The paper-style row label n^{length-1} is what tables print.
  long long length = 0;
  std::vector<BigInt> entries;

  BigInt total() const;
};

/// j R^{m-1}.
CountVector count_vector(int d, long long m);

/// C_0 .. C_lmax. C_0 is the seed d; C_l = trace(R^l) for l >= 1, which is
/// the number of closed l-walks in F(d,k) for every k >= 1.
std::vector<BigInt> closed_walk_counts(int d, int k, int lmax);

/// trace(A^l) for l = 0..lmax, by repeated multiplication.
std::vector<BigInt> trace_powers(const IntMatrix& a, int lmax);

/// [[F_{k+1}, F_k], [F_k, F_{k-1}]]; throws LibraryDefect if it differs from
/// the k-th power of the adjacency matrix of T_2.
IntMatrix fib_matrix_identity(long long k);

/// round((phi^k - psi^k) / sqrt 5) in long double. Exact for 0 <= k <= 70.
long long binet_fibonacci(int k);

/// round(phi^l + psi^l) in long double.
long long lucas_closed_form(int l);

}  // namespace fibdig
