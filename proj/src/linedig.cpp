#include "fibdig/linedig.hpp"

#include <stdexcept>

#include "fibdig/word.hpp"

namespace fibdig {

Digraph build_T(int d) {
  if (d < 2) throw std::invalid_argument("T_d requires d >= 2, got " + std::to_string(d));
  const auto n = static_cast<std::size_t>(d);
  std::vector<std::string> labels;
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    arcs.push_back({0, i, 1});
    if (i != 0) arcs.push_back({i, (i + 1) % n, 1});
  }
  return Digraph(std::move(labels), std::move(arcs));
}

std::string Lineage::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i) out.push_back('-');
    out += std::to_string(walk[i]);
    if (i > 0 && copy[i - 1] != 0) out += "#" + std::to_string(copy[i - 1]);
  }
  return out;
}

namespace {

struct LineStep {
  Digraph graph;
  // For each new vertex: the (arc index in the old graph, copy number).
  std::vector<std::pair<std::size_t, std::uint64_t>> origin;
};

LineStep apply_line(const Digraph& g, std::size_t cap,
                    const std::vector<std::string>* labels_override = nullptr) {
  const auto arcs = g.arcs();
  if (g.arc_count() > cap)
    throw CapExceeded("line digraph would have " + std::to_string(g.arc_count()) +
                      " vertices, cap is " + std::to_string(cap));

  // first_vertex[i] is the first line-digraph vertex created for arc i.
  std::vector<std::size_t> first_vertex(arcs.size() + 1, 0);
  LineStep step;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    first_vertex[i + 1] = first_vertex[i] + arcs[i].multiplicity;
    for (std::uint64_t c = 0; c < arcs[i].multiplicity; ++c) {
      step.origin.emplace_back(i, c);
      if (!labels_override) {
        std::string label = g.label(arcs[i].tail) + "-" + g.label(arcs[i].head);
        if (arcs[i].multiplicity > 1) label += "#" + std::to_string(c);
        labels.push_back(std::move(label));
      }
    }
  }
  if (labels_override) labels = *labels_override;

  // Arc (u,v) is adjacent to arc (v,z): connect every copy of each.
  std::vector<std::size_t> arc_index_by_out_start(g.order() + 1, 0);
  {
    std::size_t i = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
      arc_index_by_out_start[v] = i;
      i += g.out_arcs(v).size();
    }
    arc_index_by_out_start[g.order()] = i;
  }
  std::vector<Arc> line_arcs;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::size_t v = arcs[i].head;
    for (std::size_t j = arc_index_by_out_start[v]; j < arc_index_by_out_start[v + 1]; ++j) {
      for (std::size_t a = first_vertex[i]; a < first_vertex[i + 1]; ++a)
        for (std::size_t b = first_vertex[j]; b < first_vertex[j + 1]; ++b)
          line_arcs.push_back({a, b, 1});
    }
  }
  step.graph = Digraph(std::move(labels), std::move(line_arcs));
  return step;
}

}  // namespace

Digraph line_digraph(const Digraph& g) { return apply_line(g, static_cast<std::size_t>(-1)).graph; }

IteratedLineDigraph iterated_line_digraph(const Digraph& base, unsigned m, std::size_t cap) {
  if (base.order() > cap)
    throw CapExceeded("base digraph exceeds the cap of " + std::to_string(cap) + " vertices");
  IteratedLineDigraph out;
  out.graph = base;
  out.lineage.reserve(base.order());
  for (std::size_t v = 0; v < base.order(); ++v) out.lineage.push_back({{v}, {}});

  for (unsigned it = 0; it < m; ++it) {
    const Digraph& g = out.graph;
    const auto arcs = g.arcs();

    std::vector<Lineage> next;
    next.reserve(static_cast<std::size_t>(g.arc_count()));
    for (const Arc& a : arcs) {
      for (std::uint64_t c = 0; c < a.multiplicity; ++c) {
        // The walk of arc (u,v) is walk(u) extended by the last step of walk(v).
        Lineage l = out.lineage[a.tail];
        const Lineage& head = out.lineage[a.head];
        l.walk.push_back(head.walk.back());
        if (it == 0) {
          // First step: the copy index is the parallel arc of the base itself.
          l.copy.push_back(c);
        } else {
          l.copy.push_back(head.copy.back());
        }
        next.push_back(std::move(l));
      }
    }
    std::vector<std::string> labels;
    labels.reserve(next.size());
    for (const Lineage& l : next) labels.push_back(l.to_string());

    LineStep step = apply_line(g, cap, &labels);
    out.graph = std::move(step.graph);
    out.lineage = std::move(next);
  }
  return out;
}

BigInt order_formula(const IntMatrix& a, unsigned m) {
  if (!a.square()) throw std::invalid_argument("order_formula: matrix must be square");
  IntMatrix row = IntMatrix::ones_row(a.rows());
  for (unsigned i = 0; i < m; ++i) row = row * a;
  return row.entry_sum();
}

std::vector<std::size_t> walk_to_word_map(const IteratedLineDigraph& line, int d, int k) {
  const Digraph f = build_fibonacci_digraph(d, k);
  std::vector<std::size_t> map;
  map.reserve(line.lineage.size());
  for (const Lineage& l : line.lineage) {
    std::vector<int> digits;
    for (std::size_t v : l.walk) digits.push_back(static_cast<int>(v));
    auto idx = f.index_of(Word(std::move(digits), d).to_string());
    if (!idx) throw std::invalid_argument("walk " + l.to_string() + " is not a vertex of F(d,k)");
    map.push_back(*idx);
  }
  return map;
}

}  // namespace fibdig
