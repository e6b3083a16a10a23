#pragma once

// Branch-and-bound search for induced subtrees with the most leaves.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "p2flis/dualgraph.hpp"

namespace p2flis {

struct SearchBudget {
  std::uint64_t node_limit = 0;  // 0: unlimited
  double time_limit_s = 0.0;     // 0: unlimited
  std::size_t witness_cap = 64;  // 0: keep every optimal witness
  unsigned threads = 1;
};

/// Outcome of one search.  Witnesses are sorted tile-id lists in lexicographic
/// order; when `witnesses_complete` is set they are all the optimal trees.
struct LeafRecord {
  int n = 0;
  int max_leaves = 0;
  std::vector<std::vector<int>> witnesses;
  bool stable = false;
  bool partial = false;             // budget ran out: max_leaves is only a lower bound
  int upper_bound = 0;              // equals max_leaves unless partial
  bool witnesses_complete = false;  // no cap cut-off happened
  std::uint64_t optimal_count = 0;  // exact when witnesses_complete
  std::uint64_t nodes = 0;
};

/// `allowed` (empty = all tiles) restricts which tiles a tree may use.
LeafRecord search_max_leaves(const P2Graph& g, int n, const SearchBudget& budget = {},
                             std::span<const char> allowed = {});

/// Every induced subtree of order n with exactly `leaves` leaves (up to the cap).
LeafRecord enumerate_trees_with_leaves(const P2Graph& g, int n, int leaves, const SearchBudget& budget = {},
                                       std::span<const char> allowed = {});

/// Runs the search on each graph in turn (coarse to fine patches) and returns the
/// last record, flagged stable when the last two maxima agree.
LeafRecord search_across_levels(std::span<const P2Graph> graphs, int n, const SearchBudget& budget = {});

// FLIS v1: "n <n> maxleaves <L> stable <0|1>", optional "status partial", then
// "witness <ids>" lines.
void write_flis(std::ostream& os, const LeafRecord& r);
LeafRecord read_flis(std::istream& is);
std::string flis_to_string(const LeafRecord& r);
LeafRecord flis_from_string(const std::string& text);

}  // namespace p2flis
