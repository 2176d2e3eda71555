#pragma once

#include <cstdint>
#include <functional>

#include "ffree/digraph.hpp"

namespace ffree {

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited; deterministic cutoff
  double max_seconds = 0.0;     // 0 = unlimited; best-effort wall clock valve
};

struct SearchProgress {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  int incumbent = 0;
  int depth = 0;  // pair depth of the frontier subtrees
};

struct SearchOptions {
  int threads = 0;              // 0 = runtime default
  int fanout_depth = 12;        // decision depth of the parallel frontier
  // Tighter admissible bound near the cutoff, from the cap of one arc
  // per out-neighbourhood into any single vertex.
  bool fanin_bound = false;
  bool symmetry_break = false;  // vertex 0 must be able to reach max outdegree
  bool audit = false;           // recount pruning state at every node
  std::function<void(const SearchProgress&)> progress;
};

struct SearchResult {
  int n = 0;
  int max_size = 0;
  // decision per ordered pair in lexicographic (tail, head) order; the
  // lexicographically smallest string over all maximum digraphs
  std::vector<std::uint8_t> witness_bits;
  Digraph witness{1};
  std::uint64_t nodes_explored = 0;
  std::uint64_t nodes_pruned = 0;
  bool complete = false;
  double seconds = 0.0;
};

// Exhaustive branch and bound over all strict digraphs on n vertices,
// maximizing arcs subject to the walk-duplication check. Pairs are
// decided in lexicographic order, present before absent. The whole
// result, node counts included, is independent of the thread count;
// only a wall-clock cutoff can make runs differ.
SearchResult brute_force_max(int n, const SearchBudget& budget = {},
                             const SearchOptions& opts = {});

// Whether every absent arc would break admissibility if added.
// The input must itself pass the check.
bool is_arc_maximal(const Digraph& d);

}  // namespace ffree
