#pragma once

// Exact characteristic polynomials and the spectral checks for F(d,k).
//
// Convention: char_poly returns det(xI - A), which is monic.

#include <complex>
#include <cstddef>
#include <vector>

#include "fibdig/digraph.hpp"
#include "fibdig/errors.hpp"
#include "fibdig/int_matrix.hpp"
#include "fibdig/polynomial.hpp"

namespace fibdig {

/// det(xI - A) by the division-free Berkowitz recurrence on the full matrix.
IntPolynomial char_poly_berkowitz(const IntMatrix& a);

/// Result of peeling off nilpotent directions exposed by repeated or zero
/// rows and columns: det(xI - A) = x^x_power * det(xI - core).
struct CoreReduction {
  IntMatrix core;
  std::size_t x_power = 0;
};

/// Repeatedly (a) drops a vertex whose row or column is zero and (b) folds a
/// vertex whose row (column) repeats another's, merging its column (row) into
/// the survivor. Each step removes one factor x from the characteristic
/// polynomial and is exact for any square integer matrix.
CoreReduction reduce_to_core(const Digraph& g);
CoreReduction reduce_to_core(const IntMatrix& a);

/// det(xI - A): core reduction followed by Berkowitz on the core.
IntPolynomial char_poly(const IntMatrix& a, std::size_t order_cap = caps::kCharPolyOrder);
IntPolynomial char_poly(const Digraph& g, std::size_t order_cap = caps::kCharPolyOrder);

/// x^d - x^{d-1} - ... - x - 1.
IntPolynomial phi_d(int d);

/// x^{d+1} - 2x^d + 1, which equals (x - 1) phi_d(x).
IntPolynomial q_polynomial(int d);

struct SpectrumReport {
  int d = 0;
  int k = 0;
  std::size_t order = 0;
  std::size_t core_order = 0;
  IntPolynomial char_poly;
  IntPolynomial expected;
  bool holds = false;
};

/// Compares det(xI - A(F(d,k))) with x^{N-d} phi_d(x) exactly.
SpectrumReport verify_spectrum(int d, int k, std::size_t order_cap = caps::kCharPolyOrder);

struct RootsReport {
  int d = 0;
  double tolerance = 0.0;
  std::vector<std::complex<double>> roots;
  /// Largest |r^{d+1} - 2 r^d + 1| over the roots.
  double max_q_residual = 0.0;
  /// Smallest |r - 1| over the roots.
  double min_distance_to_one = 0.0;
  /// Positive real root from bisection on [1, 2].
  double dominant_root = 0.0;
  bool converged = false;
  bool passed = false;
};

/// Numeric roots of phi_d. Diagnostics only; nothing here is exact.
RootsReport numeric_roots_check(int d, double tolerance = 1e-10);

struct LucasReport {
  int lmax = 0;
  std::vector<BigInt> exact;
  std::vector<long long> closed_form;
  double max_float_error = 0.0;
  bool passed = false;
};

/// Closed-walk counts of F(2,k) against round(phi^l + psi^l), l = 0..lmax.
LucasReport lucas_closed_form_check(int lmax, double tolerance = 0.5);

}  // namespace fibdig
