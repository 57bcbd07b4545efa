#include "fibdig/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "fibdig/recurrence.hpp"
#include "fibdig/word.hpp"

namespace fibdig {
namespace {

using SparseRow = std::map<std::size_t, BigInt>;
using SparseSquare = std::vector<SparseRow>;

SparseSquare transpose(const SparseSquare& m) {
  SparseSquare t(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (const auto& [c, v] : m[r]) t[c].emplace(r, v);
  return t;
}

// One sweep over rows: drop zero rows, fold repeated rows. Returns the number
// of vertices removed; `m` is replaced by the reduced matrix.
std::size_t fold_rows(SparseSquare& m) {
  const std::size_t n = m.size();
  constexpr std::size_t kGone = static_cast<std::size_t>(-1);

  // Deleting a zero-row vertex also deletes its column; folding vertex u'
  // into u sends column u' onto column u. target[c] records where column c goes.
  std::vector<std::size_t> target(n, kGone);
  std::map<SparseRow, std::size_t> first_with_row;
  std::vector<std::size_t> survivors;
  for (std::size_t v = 0; v < n; ++v) {
    if (m[v].empty()) continue;
    auto [it, inserted] = first_with_row.emplace(m[v], v);
    if (inserted) survivors.push_back(v);
    target[v] = it->second;
  }
  const std::size_t removed = n - survivors.size();
  if (removed == 0) return 0;

  std::vector<std::size_t> compact(n, kGone);
  for (std::size_t i = 0; i < survivors.size(); ++i) compact[survivors[i]] = i;

  SparseSquare reduced(survivors.size());
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    for (const auto& [c, v] : m[survivors[i]]) {
      if (target[c] == kGone) continue;
      BigInt& slot = reduced[i][compact[target[c]]];
      slot += v;
      if (slot == 0) reduced[i].erase(compact[target[c]]);
    }
  }
  m = std::move(reduced);
  return removed;
}

CoreReduction reduce(SparseSquare m) {
  CoreReduction out;
  while (true) {
    std::size_t removed = fold_rows(m);
    SparseSquare t = transpose(m);
    removed += fold_rows(t);
    m = transpose(t);
    out.x_power += removed;
    if (removed == 0) break;
  }
  out.core = IntMatrix(m.size(), m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (const auto& [c, v] : m[r]) out.core(r, c) = v;
  return out;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapExceeded("characteristic polynomial limited to order " + std::to_string(cap) +
                      ", got " + std::to_string(n));
}

}  // namespace

IntPolynomial char_poly_berkowitz(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("char_poly: matrix must be square");
  const std::size_t n = a.rows();
  // p holds det(xI - A_r) for the leading r x r block, highest degree first.
  std::vector<BigInt> p{BigInt(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R S C, ..., -R S^{r-1} C.
    std::vector<BigInt> t{BigInt(1), BigInt(-a(r, r))};
    std::vector<BigInt> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t step = 0; step < r; ++step) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * v[i];
      t.push_back(-dot);
      if (step + 1 == r) break;
      std::vector<BigInt> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (a(i, j) != 0) next[i] += a(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<BigInt> q(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) q[i] += t[i - j] * p[j];
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return IntPolynomial(std::move(p));
}

CoreReduction reduce_to_core(const Digraph& g) {
  SparseSquare m(g.order());
  for (const Arc& a : g.arcs()) m[a.tail].emplace(a.head, a.multiplicity);
  return reduce(std::move(m));
}

CoreReduction reduce_to_core(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("reduce_to_core: matrix must be square");
  SparseSquare m(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0) m[r].emplace(c, a(r, c));
  return reduce(std::move(m));
}

IntPolynomial char_poly(const IntMatrix& a, std::size_t order_cap) {
  if (!a.square()) throw std::invalid_argument("char_poly: matrix must be square");
  check_cap(a.rows(), order_cap);
  CoreReduction r = reduce_to_core(a);
  return IntPolynomial::monomial(r.x_power) * char_poly_berkowitz(r.core);
}

IntPolynomial char_poly(const Digraph& g, std::size_t order_cap) {
  check_cap(g.order(), order_cap);
  CoreReduction r = reduce_to_core(g);
  return IntPolynomial::monomial(r.x_power) * char_poly_berkowitz(r.core);
}

IntPolynomial phi_d(int d) {
  if (d < 2) throw std::invalid_argument("phi_d requires d >= 2");
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1, BigInt(-1));
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial q_polynomial(int d) {
  if (d < 2) throw std::invalid_argument("q_polynomial requires d >= 2");
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 2, BigInt(0));
  c[0] = 1;
  c[static_cast<std::size_t>(d)] = -2;
  c[static_cast<std::size_t>(d) + 1] = 1;
  return IntPolynomial(std::move(c));
}

SpectrumReport verify_spectrum(int d, int k, std::size_t order_cap) {
  const BigInt n = vertex_count(d, k);
  if (n > order_cap)
    throw CapExceeded("F(" + std::to_string(d) + "," + std::to_string(k) + ") has " +
                      n.str() + " vertices, over the characteristic polynomial cap of " +
                      std::to_string(order_cap));
  const Digraph g = build_fibonacci_digraph(d, k);
  SpectrumReport report;
  report.d = d;
  report.k = k;
  report.order = g.order();
  CoreReduction r = reduce_to_core(g);
  report.core_order = r.core.rows();
  report.char_poly = IntPolynomial::monomial(r.x_power) * char_poly_berkowitz(r.core);
  report.expected =
      IntPolynomial::monomial(g.order() - static_cast<std::size_t>(d)) * phi_d(d);
  report.holds = report.char_poly == report.expected;
  return report;
}

RootsReport numeric_roots_check(int d, double tolerance) {
  const IntPolynomial p = phi_d(d);
  RootsReport report;
  report.d = d;
  report.tolerance = tolerance;

  // Companion matrix of the monic phi_d.
  const int n = d;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i)
    companion(i, n - 1) = -p.coefficient(static_cast<std::size_t>(i)).convert_to<double>();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  report.converged = solver.info() == Eigen::Success;
  if (!report.converged) return report;

  auto eval = [&](std::complex<double> x, bool derivative) {
    std::complex<double> acc = 0.0;
    const std::size_t deg = *p.degree();
    for (std::size_t i = deg + 1; i-- > 0;) {
      if (derivative) {
        if (i == 0) break;
        acc = acc * x + static_cast<double>(i) * p.coefficient(i).convert_to<double>();
      } else {
        acc = acc * x + p.coefficient(i).convert_to<double>();
      }
    }
    return acc;
  };

  report.min_distance_to_one = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    std::complex<double> r = solver.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      std::complex<double> dp = eval(r, true);
      if (std::abs(dp) == 0.0) break;
      r -= eval(r, false) / dp;
    }
    report.roots.push_back(r);
    std::complex<double> q = std::pow(r, d + 1) - 2.0 * std::pow(r, d) + 1.0;
    report.max_q_residual = std::max(report.max_q_residual, std::abs(q));
    report.min_distance_to_one = std::min(report.min_distance_to_one, std::abs(r - 1.0));
  }
  std::sort(report.roots.begin(), report.roots.end(),
            [](auto a, auto b) { return std::abs(a) != std::abs(b) ? std::abs(a) > std::abs(b)
                                                                   : a.imag() > b.imag(); });

  // phi_d(1) = 1 - d < 0 and phi_d(2) = 1 > 0.
  double lo = 1.0;
  double hi = 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = 0.5 * (lo + hi);
    (eval(mid, false).real() < 0.0 ? lo : hi) = mid;
  }
  report.dominant_root = 0.5 * (lo + hi);

  bool ok = report.max_q_residual < tolerance && report.min_distance_to_one > tolerance &&
            std::abs(report.roots.front() - report.dominant_root) < tolerance;
  if (d == 2) {
    const double root5 = std::sqrt(5.0);
    ok = ok && std::abs(report.roots[0] - (1.0 + root5) / 2.0) < tolerance &&
         std::abs(report.roots[1] - (1.0 - root5) / 2.0) < tolerance;
  }
  report.passed = ok;
  return report;
}

LucasReport lucas_closed_form_check(int lmax, double tolerance) {
  if (lmax < 0 || lmax > 70)
    throw std::invalid_argument("lucas_closed_form_check: lmax must lie in [0, 70]");
  LucasReport report;
  report.lmax = lmax;
  report.exact = closed_walk_counts(2, 1, lmax);
  const long double root5 = std::sqrt(5.0L);
  bool ok = true;
  for (int l = 0; l <= lmax; ++l) {
    const long double value =
        std::pow((1.0L + root5) / 2.0L, l) + std::pow((1.0L - root5) / 2.0L, l);
    const long long rounded = std::llround(value);
    report.closed_form.push_back(rounded);
    const long double err =
        std::fabs(value - report.exact[static_cast<std::size_t>(l)].convert_to<long double>());
    report.max_float_error = std::max(report.max_float_error, static_cast<double>(err));
    ok = ok && BigInt(rounded) == report.exact[static_cast<std::size_t>(l)];
  }
  report.passed = ok && report.max_float_error < tolerance;
  return report;
}

}  // namespace fibdig
