#include "fibdig/cycles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace fibdig {
namespace {

struct BudgetExhausted {};

class CycleSearch {
 public:
  CycleSearch(const Digraph& g, CycleCensus& census, std::uint64_t budget, const CycleVisitor& visit)
      : g_(g), census_(census), budget_(budget), visit_(visit) {}

  void johnson() {
    const std::size_t n = g_.order();
    blocked_.assign(n, false);
    blocked_by_.assign(n, {});
    in_component_.assign(n, false);
    for (start_ = 0; start_ < n; ++start_) {
      component_of_start();
      for (std::size_t v = start_; v < n; ++v) {
        blocked_[v] = false;
        blocked_by_[v].clear();
      }
      circuit(start_);
    }
  }

  void bounded(std::size_t cutoff) {
    const std::size_t n = g_.order();
    on_path_.assign(n, false);
    for (start_ = 0; start_ < n; ++start_) {
      distances_to_start();
      on_path_[start_] = true;
      path_.assign(1, start_);
      extend(cutoff);
      on_path_[start_] = false;
    }
  }

 private:
  void tick() {
    if (++census_.work > budget_) throw BudgetExhausted{};
  }

  void report() {
    ++census_.counts[path_.size()];
    if (visit_) visit_(path_);
  }

  // Strongly connected component of start_ within the vertices >= start_.
  void component_of_start() {
    const std::size_t n = g_.order();
    std::vector<bool> forward(n, false);
    std::vector<bool> backward(n, false);
    auto sweep = [&](std::vector<bool>& seen, bool reverse) {
      std::deque<std::size_t> queue{start_};
      seen[start_] = true;
      while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        auto arcs = reverse ? g_.in_arcs(u) : g_.out_arcs(u);
        for (const Arc& a : arcs) {
          std::size_t w = reverse ? a.tail : a.head;
          if (w < start_ || seen[w]) continue;
          seen[w] = true;
          queue.push_back(w);
        }
      }
    };
    sweep(forward, false);
    sweep(backward, true);
    for (std::size_t v = 0; v < n; ++v) in_component_[v] = v >= start_ && forward[v] && backward[v];
  }

  void unblock(std::size_t u) {
    blocked_[u] = false;
    while (!blocked_by_[u].empty()) {
      std::size_t w = *blocked_by_[u].begin();
      blocked_by_[u].erase(blocked_by_[u].begin());
      if (blocked_[w]) unblock(w);
    }
  }

  bool circuit(std::size_t v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (const Arc& a : g_.out_arcs(v)) {
      tick();
      const std::size_t w = a.head;
      if (!in_component_[w]) continue;
      if (w == start_) {
        report();
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (const Arc& a : g_.out_arcs(v))
        if (in_component_[a.head]) blocked_by_[a.head].insert(v);
    }
    path_.pop_back();
    return found;
  }

  // BFS on reversed arcs restricted to vertices >= start_.
  void distances_to_start() {
    dist_.assign(g_.order(), std::nullopt);
    std::deque<std::size_t> queue{start_};
    dist_[start_] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (const Arc& a : g_.in_arcs(u)) {
        if (a.tail < start_ || dist_[a.tail]) continue;
        dist_[a.tail] = *dist_[u] + 1;
        queue.push_back(a.tail);
      }
    }
  }

  void extend(std::size_t cutoff) {
    const std::size_t v = path_.back();
    for (const Arc& a : g_.out_arcs(v)) {
      tick();
      const std::size_t w = a.head;
      if (w == start_) {
        report();
        continue;
      }
      if (w < start_ || on_path_[w] || !dist_[w] || path_.size() + *dist_[w] > cutoff) continue;
      on_path_[w] = true;
      path_.push_back(w);
      extend(cutoff);
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  const Digraph& g_;
  CycleCensus& census_;
  std::uint64_t budget_;
  const CycleVisitor& visit_;
  std::size_t start_ = 0;
  std::vector<std::size_t> path_;
  std::vector<bool> blocked_;
  std::vector<std::set<std::size_t>> blocked_by_;
  std::vector<bool> in_component_;
  std::vector<bool> on_path_;
  std::vector<std::optional<std::size_t>> dist_;
};

std::vector<Word> windows_of(const std::vector<int>& cyclic, int k, std::size_t start, std::size_t count) {
  std::vector<Word> out;
  const std::size_t len = cyclic.size();
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<int> digits(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < digits.size(); ++i) digits[i] = cyclic[(start + t + i) % len];
    out.emplace_back(std::move(digits), 2);
  }
  return out;
}

}  // namespace

std::uint64_t CycleCensus::count(std::size_t length) const {
  auto it = counts.find(length);
  return it == counts.end() ? 0 : it->second;
}

std::size_t CycleCensus::longest() const {
  for (auto it = counts.rbegin(); it != counts.rend(); ++it)
    if (it->second > 0) return it->first;
  return 0;
}

CycleCensus enumerate_cycles(const Digraph& g, std::size_t cutoff, std::uint64_t work_budget,
                             const CycleVisitor& visit) {
  CycleCensus census;
  census.cutoff = cutoff;
  CycleSearch search(g, census, work_budget, visit);
  try {
    if (cutoff >= g.order())
      search.johnson();
    else if (cutoff > 0)
      search.bounded(cutoff);
  } catch (const BudgetExhausted&) {
    census.truncated = true;
  }
  census.complete = !census.truncated && cutoff >= g.order();
  return census;
}

std::size_t pancyclic_range(const CycleCensus& census) {
  std::size_t l = 0;
  while (census.count(l + 1) > 0) ++l;
  return l;
}

std::vector<Word> periodic_vertex_cycle(int k, int p) {
  if (p < 2 || p > k)
    throw std::invalid_argument("periodic_vertex_cycle requires 2 <= p <= k, got p = " +
                                std::to_string(p) + ", k = " + std::to_string(k));
  // One period of the sequence with a 1 at every multiple of p (1-indexed).
  std::vector<int> period(static_cast<std::size_t>(p), 0);
  period.back() = 1;
  return windows_of(period, k, 0, static_cast<std::size_t>(p));
}

std::vector<Word> anti_diagonal_cycle(int k, int q, CycleBase base) {
  if (k < 2 || q < 1 || q > k / 2)
    throw std::invalid_argument("anti_diagonal_cycle requires 1 <= q <= floor(k/2), got q = " +
                                std::to_string(q) + ", k = " + std::to_string(k));
  // The cycle reads the cyclic sequence (10)^q 0^z with z = k-1 (base 0) or k-2 (base 1).
  const int zeros = base == CycleBase::kZero ? k - 1 : k - 2;
  std::vector<int> cyclic;
  for (int i = 0; i < q; ++i) {
    cyclic.push_back(1);
    cyclic.push_back(0);
  }
  cyclic.insert(cyclic.end(), static_cast<std::size_t>(zeros), 0);

  // Both base vertices begin at the last 0 of the final "10": 0^k is followed by
  // more zeros, while 0^{k-1}1 wraps onto the leading 1.
  const auto start = static_cast<std::size_t>(2 * q - 1);
  return windows_of(cyclic, k, start % cyclic.size(), cyclic.size());
}

std::optional<std::string> cycle_problem(const Digraph& g, std::span<const Word> cycle) {
  if (cycle.empty()) return "empty cycle";
  std::vector<std::size_t> idx;
  std::set<std::size_t> seen;
  for (const Word& w : cycle) {
    if (!is_admissible(w)) return "word " + w.to_string() + " is not admissible";
    auto v = g.index_of(w.to_string());
    if (!v) return "word " + w.to_string() + " is not a vertex";
    if (!seen.insert(*v).second) return "vertex " + w.to_string() + " repeats";
    idx.push_back(*v);
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    std::size_t next = idx[(i + 1) % idx.size()];
    if (g.multiplicity(idx[i], next) == 0)
      return "no arc " + g.label(idx[i]) + " -> " + g.label(next);
  }
  return std::nullopt;
}

std::size_t semipancyclic_bound(int k) {
  if (k < 2) throw std::invalid_argument("semi-pancyclicity needs k >= 2");
  return static_cast<std::size_t>(k % 2 == 1 ? 2 * k - 2 : 2 * k - 1);
}

SemipancyclicReport verify_semipancyclic(int k, std::optional<std::size_t> census_cutoff,
                                         std::uint64_t work_budget) {
  SemipancyclicReport report;
  report.k = k;
  report.ell = semipancyclic_bound(k);
  const Digraph g = build_fibonacci_digraph(2, k);

  report.cycles.push_back({"loop", 0, {Word(std::vector<int>(static_cast<std::size_t>(k), 0), 2)}, {}});
  for (int p = 2; p <= k; ++p) report.cycles.push_back({"periodic", p, periodic_vertex_cycle(k, p), {}});
  for (int q = 1; q <= k / 2; ++q) {
    report.cycles.push_back({"[1,q]", q, anti_diagonal_cycle(k, q, CycleBase::kOne), {}});
    report.cycles.push_back({"[0,q]", q, anti_diagonal_cycle(k, q, CycleBase::kZero), {}});
  }

  bool all_valid = true;
  for (auto& c : report.cycles) {
    c.problem = cycle_problem(g, c.vertices);
    if (c.problem) {
      all_valid = false;
    } else {
      report.constructed_lengths.insert(c.vertices.size());
    }
  }
  report.constructive_covers = all_valid;
  for (std::size_t l = 1; l <= report.ell; ++l)
    if (!report.constructed_lengths.count(l)) report.constructive_covers = false;

  // Canonical rotations (smallest vertex index first) of the constructed cycles.
  std::set<std::vector<std::size_t>> wanted;
  for (const auto& c : report.cycles) {
    if (c.problem) continue;
    std::vector<std::size_t> idx;
    for (const Word& w : c.vertices) idx.push_back(*g.index_of(w.to_string()));
    std::rotate(idx.begin(), std::min_element(idx.begin(), idx.end()), idx.end());
    wanted.insert(std::move(idx));
  }
  std::set<std::vector<std::size_t>> found;
  CycleVisitor visit = [&](std::span<const std::size_t> cyc) {
    std::vector<std::size_t> v(cyc.begin(), cyc.end());
    if (wanted.count(v)) found.insert(std::move(v));
  };
  const std::size_t cutoff = census_cutoff.value_or(g.order());
  report.census = enumerate_cycles(g, cutoff, work_budget, visit);

  const bool reaches_ell = cutoff >= report.ell && !report.census->truncated;
  report.census_confirms =
      reaches_ell && pancyclic_range(*report.census) >= report.ell && found.size() == wanted.size();
  if (report.census->complete) report.circumference = report.census->longest();
  report.passed = report.constructive_covers && report.census_confirms;
  return report;
}

}  // namespace fibdig
