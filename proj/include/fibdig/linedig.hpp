#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fibdig/digraph.hpp"
#include "fibdig/errors.hpp"
#include "fibdig/int_matrix.hpp"

namespace fibdig {

/// T_d on Z_d: arcs (0, i) for every i, and (i, i + 1 mod d) for i != 0.
Digraph build_T(int d);

/// The walk in the base digraph that a vertex of L^m G stands for.
///
/// `walk` has m + 1 base vertices. `copy[i]` picks which parallel arc carried
/// step i (always 0 when the base digraph is simple).
struct Lineage {
  std::vector<std::size_t> walk;
  std::vector<std::uint64_t> copy;

  /// Dash-joined base vertices, e.g. "0-1-2"; a step over a parallel arc gets "#c".
  std::string to_string() const;

  friend bool operator==(const Lineage&, const Lineage&) = default;
};

/// One application of L. Vertex labels are "tail-head" (plus "#c" for the
/// c-th copy of a parallel arc), in canonical arc order.
Digraph line_digraph(const Digraph& g);

struct IteratedLineDigraph {
  Digraph graph;
  /// lineage[v] is the base walk of vertex v of `graph`.
  std::vector<Lineage> lineage;
};

/// L^m G with every vertex labelled by its base walk. Throws CapExceeded when an
/// intermediate order would exceed `cap`.
IteratedLineDigraph iterated_line_digraph(const Digraph& base, unsigned m,
                                          std::size_t cap = caps::kWordEnumeration);

/// j A^m j^T, the order of L^m G when A is the adjacency matrix of G.
BigInt order_formula(const IntMatrix& a, unsigned m);

/// Map from L^{k-1} T_d to F(d,k) reading each base walk as a digit word.
std::vector<std::size_t> walk_to_word_map(const IteratedLineDigraph& line, int d, int k);

}  // namespace fibdig
