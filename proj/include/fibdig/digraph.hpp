#pragma once

// Core digraph model: labeled vertices, an arc multiset with loops and
// parallel arcs, and the exact structural queries built on it.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fibdig/errors.hpp"
#include "fibdig/int_matrix.hpp"

namespace fibdig {

struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Immutable digraph with distinct vertex labels.
///
/// Arcs are kept sorted by (tail, head) with parallel copies folded into a
/// single entry carrying a positive multiplicity. Two digraphs compare equal
/// when labels and arc multisets coincide.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<std::string> labels, std::vector<Arc> arcs);

  std::size_t order() const noexcept { return labels_.size(); }
  /// Number of arcs counted with multiplicity.
  std::uint64_t arc_count() const noexcept { return arc_total_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const Arc> out_arcs(std::size_t v) const;
  /// Arcs entering v, sorted by tail.
  std::span<const Arc> in_arcs(std::size_t v) const;

  std::uint64_t multiplicity(std::size_t tail, std::size_t head) const;
  std::uint64_t out_degree(std::size_t v) const;
  std::uint64_t in_degree(std::size_t v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.labels_ == b.labels_ && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Arc> in_arcs_;
  std::vector<std::size_t> in_offsets_;
  std::unordered_map<std::string, std::size_t> index_;
  std::uint64_t arc_total_ = 0;
};

/// Entry (u, v) is the number of arcs from u to v.
IntMatrix adjacency_matrix(const Digraph& g);

Digraph converse(const Digraph& g);

/// Vertices of `subset` (in the given order) with every arc of g joining two of them.
Digraph induced_subdigraph(const Digraph& g, std::span<const std::size_t> subset);

/// Directed BFS distances; std::nullopt marks an unreachable vertex.
std::vector<std::optional<std::size_t>> distances_from(const Digraph& g, std::size_t source);

/// Largest finite distance from `source`; throws NotStronglyConnected if some vertex is unreachable.
std::size_t eccentricity(const Digraph& g, std::size_t source);

/// Max shortest-walk length over ordered pairs. Throws NotStronglyConnected with a witness pair.
std::size_t diameter(const Digraph& g);

struct DegreeProfile {
  std::map<std::uint64_t, std::size_t> out;
  std::map<std::uint64_t, std::size_t> in;
};

DegreeProfile degree_profile(const Digraph& g);

/// Vertex map `f` sends every arc of g to an arc of h.
bool check_homomorphism(std::span<const std::size_t> f, const Digraph& g, const Digraph& h);

/// Independent check that `f` is a bijection preserving arc multiplicities both ways.
bool is_isomorphism(std::span<const std::size_t> f, const Digraph& g, const Digraph& h);

/// Backtracking search with color refinement. Returns f with f[v in g] = vertex of h.
std::optional<std::vector<std::size_t>> find_isomorphism(
    const Digraph& g, const Digraph& h, std::size_t order_cap = caps::kIsomorphismOrder);

/// Exact size of the automorphism group by exhaustive refined search.
std::uint64_t automorphism_count(const Digraph& g,
                                 std::size_t order_cap = caps::kIsomorphismOrder);

}  // namespace fibdig
