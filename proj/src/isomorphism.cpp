// Isomorphism and automorphism search: individualization plus color
// refinement over the disjoint union of the two digraphs, so that color ids
// are directly comparable between the two sides.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fibdig/digraph.hpp"

namespace fibdig {
namespace {

using Colors = std::vector<std::size_t>;

class JointSearch {
 public:
  JointSearch(const Digraph& g, const Digraph& h) : g_(g), h_(h), n_(g.order()) {}

  /// Visits every bijection that survives refinement and passes arc-by-arc
  /// verification. The visitor returns false to stop the search.
  template <typename Visitor>
  void run(Visitor&& visit) {
    Colors colors(2 * n_, 0);
    stop_ = false;
    search(colors, visit);
  }

 private:
  std::span<const Arc> out(std::size_t v) const {
    return v < n_ ? g_.out_arcs(v) : h_.out_arcs(v - n_);
  }
  std::span<const Arc> in(std::size_t v) const {
    return v < n_ ? g_.in_arcs(v) : h_.in_arcs(v - n_);
  }
  std::size_t offset(std::size_t v) const { return v < n_ ? 0 : n_; }

  // Splits classes until every vertex's (color, out-profile, in-profile) is
  // shared by its whole class. Returns false if the two sides fall out of balance.
  bool refine(Colors& colors) const {
    std::size_t classes = count_classes(colors);
    std::vector<std::int64_t> sig;
    std::vector<std::pair<std::size_t, std::uint64_t>> nbrs;
    while (true) {
      std::map<std::vector<std::int64_t>, std::size_t> ids;
      std::vector<std::vector<std::int64_t>> sigs(colors.size());
      for (std::size_t v = 0; v < colors.size(); ++v) {
        sig.clear();
        sig.push_back(static_cast<std::int64_t>(colors[v]));
        for (int dir = 0; dir < 2; ++dir) {
          nbrs.clear();
          auto arcs = dir == 0 ? out(v) : in(v);
          for (const Arc& a : arcs) {
            std::size_t w = (dir == 0 ? a.head : a.tail) + offset(v);
            nbrs.emplace_back(colors[w], a.multiplicity);
          }
          std::sort(nbrs.begin(), nbrs.end());
          sig.push_back(-1 - dir);
          for (auto [c, m] : nbrs) {
            sig.push_back(static_cast<std::int64_t>(c));
            sig.push_back(static_cast<std::int64_t>(m));
          }
        }
        sigs[v] = sig;
        ids.emplace(sig, 0);
      }
      std::size_t next = 0;
      for (auto& [key, id] : ids) id = next++;
      for (std::size_t v = 0; v < colors.size(); ++v) colors[v] = ids.at(sigs[v]);
      if (!balanced(colors)) return false;
      if (ids.size() == classes) return true;
      classes = ids.size();
    }
  }

  static std::size_t count_classes(const Colors& colors) {
    Colors sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  bool balanced(const Colors& colors) const {
    std::map<std::size_t, std::int64_t> tally;
    for (std::size_t v = 0; v < colors.size(); ++v) tally[colors[v]] += v < n_ ? 1 : -1;
    return std::all_of(tally.begin(), tally.end(), [](const auto& kv) { return kv.second == 0; });
  }

  template <typename Visitor>
  void search(Colors colors, Visitor& visit) {
    if (stop_ || !refine(colors)) return;

    std::map<std::size_t, std::size_t> class_size;
    for (std::size_t v = 0; v < n_; ++v) ++class_size[colors[v]];
    std::optional<std::size_t> target;
    for (auto [c, size] : class_size) {
      if (size > 1 && (!target || size < class_size[*target])) target = c;
    }

    if (!target) {
      std::vector<std::size_t> map(n_);
      std::map<std::size_t, std::size_t> h_of_color;
      for (std::size_t w = n_; w < 2 * n_; ++w) h_of_color[colors[w]] = w - n_;
      for (std::size_t v = 0; v < n_; ++v) map[v] = h_of_color.at(colors[v]);
      if (is_isomorphism(map, g_, h_)) stop_ = !visit(map);
      return;
    }

    std::size_t v = 0;
    while (colors[v] != *target) ++v;
    const std::size_t fresh = *std::max_element(colors.begin(), colors.end()) + 1;
    for (std::size_t w = n_; w < 2 * n_ && !stop_; ++w) {
      if (colors[w] != *target) continue;
      Colors next = colors;
      next[v] = fresh;
      next[w] = fresh;
      search(std::move(next), visit);
    }
  }

  const Digraph& g_;
  const Digraph& h_;
  std::size_t n_;
  bool stop_ = false;
};

void check_cap(const Digraph& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapExceeded("isomorphism search limited to " + std::to_string(cap) + " vertices, got " +
                      std::to_string(g.order()));
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Digraph& g, const Digraph& h,
                                                         std::size_t order_cap) {
  check_cap(g, order_cap);
  check_cap(h, order_cap);
  if (g.order() != h.order() || g.arc_count() != h.arc_count() ||
      g.arcs().size() != h.arcs().size())
    return std::nullopt;
  if (g.order() == 0) return std::vector<std::size_t>{};

  std::optional<std::vector<std::size_t>> found;
  JointSearch(g, h).run([&](const std::vector<std::size_t>& map) {
    found = map;
    return false;
  });
  return found;
}

std::uint64_t automorphism_count(const Digraph& g, std::size_t order_cap) {
  check_cap(g, order_cap);
  if (g.order() == 0) return 1;
  std::uint64_t count = 0;
  JointSearch(g, g).run([&](const std::vector<std::size_t>&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace fibdig
