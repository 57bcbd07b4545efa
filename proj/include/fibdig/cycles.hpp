#pragma once

// Simple-cycle census and the explicit cycle families of F(2,k).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fibdig/digraph.hpp"
#include "fibdig/errors.hpp"
#include "fibdig/word.hpp"

namespace fibdig {

/// Number of simple cycles per length. Cycles are vertex sequences: parallel
/// arcs do not multiply the count, and rotations count once.
struct CycleCensus {
  std::map<std::size_t, std::uint64_t> counts;
  std::size_t cutoff = 0;
  /// Every simple cycle was enumerated (cutoff >= order, budget not exhausted).
  bool complete = false;
  /// The work budget ran out; counts are lower bounds.
  bool truncated = false;
  std::uint64_t work = 0;

  std::uint64_t count(std::size_t length) const;
  /// Longest length with a nonzero count, 0 if none.
  std::size_t longest() const;
};

/// Receives each cycle rotated so that its smallest vertex index comes first.
using CycleVisitor = std::function<void(std::span<const std::size_t>)>;

/// Exact simple-cycle counts for lengths <= cutoff. Uses Johnson's algorithm
/// when cutoff >= order, otherwise a distance-pruned backtracking search.
CycleCensus enumerate_cycles(const Digraph& g, std::size_t cutoff,
                             std::uint64_t work_budget = caps::kCycleWorkBudget,
                             const CycleVisitor& visit = {});

/// Largest L with at least one cycle of every length 1..L.
std::size_t pancyclic_range(const CycleCensus& census);

/// The p distinct vertices of the cycle generated by the p-periodic word of
/// F(2,k) with 1's at positions p, 2p, ...; the last vertex is adjacent to the first.
std::vector<Word> periodic_vertex_cycle(int k, int p);

enum class CycleBase { kZero, kOne };

/// The [0,q] cycle (through 0...0, length k + 2q - 1) or the [1,q] cycle
/// (through 0...01, length k + 2q - 2), starting at that base vertex.
std::vector<Word> anti_diagonal_cycle(int k, int q, CycleBase base);

/// Empty if `cycle` is a simple closed cycle of g (by vertex labels);
/// otherwise a description of the first offending step.
std::optional<std::string> cycle_problem(const Digraph& g, std::span<const Word> cycle);

struct ConstructedCycle {
  std::string family;  // "loop", "periodic", "[1,q]", "[0,q]"
  int parameter = 0;   // p or q
  std::vector<Word> vertices;
  std::optional<std::string> problem;
};

struct SemipancyclicReport {
  int k = 0;
  std::size_t ell = 0;
  std::vector<ConstructedCycle> cycles;
  std::set<std::size_t> constructed_lengths;
  bool constructive_covers = false;
  std::optional<CycleCensus> census;
  /// Census shows every length 1..ell and every constructed cycle.
  bool census_confirms = false;
  /// True maximum simple-cycle length; only set when the census is complete.
  std::optional<std::size_t> circumference;
  bool passed = false;
};

/// ell = 2k - 2 for odd k and 2k - 1 for even k.
std::size_t semipancyclic_bound(int k);

/// Builds every constructive cycle of F(2,k), checks each against the digraph
/// and cross-checks with a census up to `census_cutoff` (the full order when unset).
SemipancyclicReport verify_semipancyclic(int k, std::optional<std::size_t> census_cutoff = std::nullopt,
                                         std::uint64_t work_budget = caps::kCycleWorkBudget);

}  // namespace fibdig
