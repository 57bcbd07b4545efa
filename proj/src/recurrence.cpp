#include "fibdig/recurrence.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include "fibdig/errors.hpp"

namespace fibdig {
namespace {

void check_d(int d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2, got " + std::to_string(d));
}

// Runs x_{n} = x_{n-1} + ... + x_{n-d} forward from a window of d seeds
// (oldest first) for `steps` steps and returns the final value.
BigInt run_window(std::deque<BigInt> window, long long steps) {
  BigInt sum = 0;
  for (const auto& v : window) sum += v;
  for (long long s = 0; s < steps; ++s) {
    BigInt next = sum;
    sum += next - window.front();
    window.pop_front();
    window.push_back(std::move(next));
  }
  return window.back();
}

}  // namespace

BigInt d_step_fibonacci(int d, long long k) {
  check_d(d);
  if (k <= 0) return 0;
  if (k <= 2) return 1;
  // Window F_{3-d} .. F_2; only F_1 and F_2 are nonzero.
  std::deque<BigInt> window(static_cast<std::size_t>(d), BigInt(0));
  window[static_cast<std::size_t>(d) - 1] = 1;
  window[static_cast<std::size_t>(d) - 2] = 1;
  return run_window(std::move(window), k - 2);
}

BigInt vertex_count(int d, long long k) {
  check_d(d);
  if (k < 2 - d)
    throw std::invalid_argument("vertex_count: index " + std::to_string(k) +
                                " lies below the seed range");
  if (k <= 0) return 1;
  std::deque<BigInt> window(static_cast<std::size_t>(d), BigInt(1));
  window.back() = d;
  return run_window(std::move(window), k - 1);
}

IntMatrix recurrence_matrix(int d) {
  check_d(d);
  const auto n = static_cast<std::size_t>(d);
  IntMatrix r(n, n);
  for (std::size_t j = 0; j < n; ++j) r(0, j) = 1;
  for (std::size_t i = 1; i < n; ++i) r(i, (i + 1) % n) = 1;
  return r;
}

BigInt CountVector::total() const {
  BigInt s = 0;
  for (const auto& v : entries) s += v;
  return s;
}

CountVector count_vector(int d, long long m) {
  check_d(d);
  if (m < 1) throw std::invalid_argument("count_vector: word length must be at least 1");
  const IntMatrix r = recurrence_matrix(d);
  IntMatrix row = IntMatrix::ones_row(static_cast<std::size_t>(d));
  for (long long i = 1; i < m; ++i) row = row * r;
  CountVector out{d, m, {}};
  for (std::size_t j = 0; j < row.cols(); ++j) out.entries.push_back(row(0, j));
  return out;
}

std::vector<BigInt> trace_powers(const IntMatrix& a, int lmax) {
  if (!a.square()) throw std::invalid_argument("trace_powers: matrix must be square");
  if (lmax < 0) throw std::invalid_argument("trace_powers: lmax must be nonnegative");
  std::vector<BigInt> traces;
  IntMatrix power = IntMatrix::identity(a.rows());
  traces.push_back(power.trace());
  for (int l = 1; l <= lmax; ++l) {
    power = power * a;
    traces.push_back(power.trace());
  }
  return traces;
}

std::vector<BigInt> closed_walk_counts(int d, int k, int lmax) {
  check_d(d);
  if (k < 1) throw std::invalid_argument("closed_walk_counts: k must be at least 1");
  std::vector<BigInt> counts = trace_powers(recurrence_matrix(d), lmax);
  counts[0] = d;  // trace(R^0) is already d; kept explicit as the recurrence seed.
  return counts;
}

IntMatrix fib_matrix_identity(long long k) {
  if (k < 2) throw std::invalid_argument("fib_matrix_identity requires k >= 2");
  IntMatrix expected(2, 2);
  expected(0, 0) = d_step_fibonacci(2, k + 1);
  expected(0, 1) = d_step_fibonacci(2, k);
  expected(1, 0) = d_step_fibonacci(2, k);
  expected(1, 1) = d_step_fibonacci(2, k - 1);
  const IntMatrix power = matrix_power(IntMatrix{{1, 1}, {1, 0}}, static_cast<unsigned long long>(k));
  if (power != expected)
    throw LibraryDefect("T_2 adjacency power disagrees with the Fibonacci matrix at k = " +
                        std::to_string(k));
  return expected;
}

long long binet_fibonacci(int k) {
  if (k < 0 || k > 90) throw std::invalid_argument("binet_fibonacci: k must lie in [0, 90]");
  const long double root5 = std::sqrt(5.0L);
  const long double phi = (1.0L + root5) / 2.0L;
  const long double psi = (1.0L - root5) / 2.0L;
  return std::llround((std::pow(phi, k) - std::pow(psi, k)) / root5);
}

long long lucas_closed_form(int l) {
  if (l < 0 || l > 90) throw std::invalid_argument("lucas_closed_form: l must lie in [0, 90]");
  const long double root5 = std::sqrt(5.0L);
  return std::llround(std::pow((1.0L + root5) / 2.0L, l) + std::pow((1.0L - root5) / 2.0L, l));
}

}  // namespace fibdig
