#pragma once

#include <string>
#include <vector>

#include "fibdig/digraph.hpp"
#include "fibdig/int_matrix.hpp"
#include "oracles/oracles.hpp"

namespace testing_support {

inline oracle::AdjList to_adj(const fibdig::Digraph& g) {
  oracle::AdjList adj(g.order());
  for (const fibdig::Arc& a : g.arcs())
    for (std::uint64_t c = 0; c < a.multiplicity; ++c) adj[a.tail].push_back(a.head);
  return adj;
}

inline oracle::Matrix to_oracle_matrix(const fibdig::IntMatrix& m) {
  oracle::Matrix out(m.rows(), std::vector<oracle::Big>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

/// Random digraph on n vertices; each ordered pair (loops included) gets an
/// arc with probability percent/100 and multiplicity up to max_mult.
inline fibdig::Digraph random_digraph(oracle::Rng& rng, std::size_t n, int percent, int max_mult = 1) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<fibdig::Arc> arcs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (rng.between(1, 100) <= percent)
        arcs.push_back({u, v, static_cast<std::uint64_t>(rng.between(1, max_mult))});
  return fibdig::Digraph(std::move(labels), std::move(arcs));
}

/// g with vertex v moved to position perm[v] (labels follow their vertex).
inline fibdig::Digraph relabel(const fibdig::Digraph& g, const std::vector<std::size_t>& perm) {
  std::vector<std::string> labels(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) labels[perm[v]] = g.label(v);
  std::vector<fibdig::Arc> arcs;
  for (const fibdig::Arc& a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head], a.multiplicity});
  return fibdig::Digraph(std::move(labels), std::move(arcs));
}

inline std::vector<std::size_t> random_permutation(oracle::Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(rng.between(0, static_cast<long long>(i) - 1))]);
  return p;
}

}  // namespace testing_support
