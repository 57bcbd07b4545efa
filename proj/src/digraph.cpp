#include "fibdig/digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace fibdig {

Digraph::Digraph(std::vector<std::string> labels, std::vector<Arc> arcs)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[v], v).second)
      throw std::invalid_argument("Digraph: duplicate vertex label '" + labels_[v] + "'");
  }

  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
  });
  arcs_.reserve(arcs.size());
  for (const Arc& a : arcs) {
    if (a.tail >= n || a.head >= n) throw std::out_of_range("Digraph: arc endpoint out of range");
    if (a.multiplicity == 0) continue;
    if (!arcs_.empty() && arcs_.back().tail == a.tail && arcs_.back().head == a.head)
      arcs_.back().multiplicity += a.multiplicity;
    else
      arcs_.push_back(a);
    arc_total_ += a.multiplicity;
  }

  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offsets_[a.tail + 1];
    ++in_offsets_[a.head + 1];
  }
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
  std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());

  // arcs_ is sorted by tail, so a stable fill keeps each in-list sorted by tail.
  in_arcs_.resize(arcs_.size());
  std::vector<std::size_t> fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (const Arc& a : arcs_) in_arcs_[fill[a.head]++] = a;
}

std::optional<std::size_t> Digraph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const Arc> Digraph::out_arcs(std::size_t v) const {
  if (v >= order()) throw std::out_of_range("Digraph::out_arcs");
  return std::span<const Arc>(arcs_).subspan(out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const Arc> Digraph::in_arcs(std::size_t v) const {
  if (v >= order()) throw std::out_of_range("Digraph::in_arcs");
  return std::span<const Arc>(in_arcs_).subspan(in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
}

std::uint64_t Digraph::multiplicity(std::size_t tail, std::size_t head) const {
  auto out = out_arcs(tail);
  auto it = std::lower_bound(out.begin(), out.end(), head,
                             [](const Arc& a, std::size_t h) { return a.head < h; });
  return (it != out.end() && it->head == head) ? it->multiplicity : 0;
}

std::uint64_t Digraph::out_degree(std::size_t v) const {
  std::uint64_t s = 0;
  for (const Arc& a : out_arcs(v)) s += a.multiplicity;
  return s;
}

std::uint64_t Digraph::in_degree(std::size_t v) const {
  std::uint64_t s = 0;
  for (const Arc& a : in_arcs(v)) s += a.multiplicity;
  return s;
}

IntMatrix adjacency_matrix(const Digraph& g) {
  IntMatrix a(g.order(), g.order());
  for (const Arc& arc : g.arcs()) a(arc.tail, arc.head) = arc.multiplicity;
  return a;
}

Digraph converse(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) arcs.push_back({a.head, a.tail, a.multiplicity});
  return Digraph(g.labels(), std::move(arcs));
}

Digraph induced_subdigraph(const Digraph& g, std::span<const std::size_t> subset) {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(g.order(), kAbsent);
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    std::size_t v = subset[i];
    if (v >= g.order()) throw std::out_of_range("induced_subdigraph: vertex index out of range");
    if (position[v] != kAbsent) throw std::invalid_argument("induced_subdigraph: repeated vertex");
    position[v] = i;
    labels.push_back(g.label(v));
  }
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (position[a.tail] != kAbsent && position[a.head] != kAbsent)
      arcs.push_back({position[a.tail], position[a.head], a.multiplicity});
  }
  return Digraph(std::move(labels), std::move(arcs));
}

std::vector<std::optional<std::size_t>> distances_from(const Digraph& g, std::size_t source) {
  if (source >= g.order()) throw std::out_of_range("distances_from: source out of range");
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (const Arc& a : g.out_arcs(u)) {
      if (!dist[a.head]) {
        dist[a.head] = *dist[u] + 1;
        queue.push_back(a.head);
      }
    }
  }
  return dist;
}

std::size_t eccentricity(const Digraph& g, std::size_t source) {
  auto dist = distances_from(g, source);
  std::size_t ecc = 0;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (!dist[v]) {
      throw NotStronglyConnected(source, v,
                                 "no directed walk from '" + g.label(source) + "' to '" +
                                     g.label(v) + "'");
    }
    ecc = std::max(ecc, *dist[v]);
  }
  return ecc;
}

std::size_t diameter(const Digraph& g) {
  if (g.order() == 0) throw std::invalid_argument("diameter of the empty digraph");
  std::size_t diam = 0;
  for (std::size_t s = 0; s < g.order(); ++s) diam = std::max(diam, eccentricity(g, s));
  return diam;
}

DegreeProfile degree_profile(const Digraph& g) {
  DegreeProfile p;
  for (std::size_t v = 0; v < g.order(); ++v) {
    ++p.out[g.out_degree(v)];
    ++p.in[g.in_degree(v)];
  }
  return p;
}

bool check_homomorphism(std::span<const std::size_t> f, const Digraph& g, const Digraph& h) {
  if (f.size() != g.order()) return false;
  for (std::size_t image : f)
    if (image >= h.order()) return false;
  for (const Arc& a : g.arcs())
    if (h.multiplicity(f[a.tail], f[a.head]) == 0) return false;
  return true;
}

bool is_isomorphism(std::span<const std::size_t> f, const Digraph& g, const Digraph& h) {
  if (g.order() != h.order() || f.size() != g.order()) return false;
  if (g.arcs().size() != h.arcs().size() || g.arc_count() != h.arc_count()) return false;
  std::vector<bool> hit(h.order(), false);
  for (std::size_t image : f) {
    if (image >= h.order() || hit[image]) return false;
    hit[image] = true;
  }
  // Same number of distinct arcs on both sides, so forward preservation suffices.
  for (const Arc& a : g.arcs())
    if (h.multiplicity(f[a.tail], f[a.head]) != a.multiplicity) return false;
  return true;
}

}  // namespace fibdig
