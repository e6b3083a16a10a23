#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "p2flis/dualgraph.hpp"

namespace p2flis {

/// A set of tiles whose induced subgraph is a tree, with cached induced degrees.
class InducedSubtree {
 public:
  InducedSubtree() = default;
  /// Throws Error(Invalid) if the tiles do not induce a tree of g.
  InducedSubtree(const P2Graph& g, std::vector<int> tiles);

  const std::vector<int>& tiles() const { return tiles_; }
  std::size_t order() const { return tiles_.size(); }
  bool contains(int tile) const;
  /// Induced degree; 0 for tiles outside the set.
  int degree(int tile) const;
  std::span<const int> degrees() const { return degrees_; }  // parallel to tiles()

  int leaf_count() const;
  std::vector<int> leaves() const;
  std::vector<int> internal() const;

  friend bool operator==(const InducedSubtree& a, const InducedSubtree& b) { return a.tiles_ == b.tiles_; }

 private:
  std::vector<int> tiles_;
  std::vector<int> degrees_;
};

/// Whether the tiles induce a tree (empty and single tiles count as trees).
bool induces_tree(const P2Graph& g, std::span<const int> tiles);

inline int leaf_count(const InducedSubtree& t) { return t.leaf_count(); }

/// Edges of g with both ends in the set, as (a, b) with a < b.
std::vector<std::pair<int, int>> induced_edges(const P2Graph& g, std::span<const int> sorted_tiles);

}  // namespace p2flis
