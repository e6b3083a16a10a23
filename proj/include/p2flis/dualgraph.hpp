#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "p2flis/geometry.hpp"

namespace p2flis {

/// Dual graph of a patch: one vertex per whole tile, an edge per shared full side.
/// Immutable; adjacency lists are sorted by tile id.
class P2Graph {
 public:
  P2Graph() = default;
  /// Throws Error(Invalid) unless the lists are symmetric and loop-free.
  explicit P2Graph(std::vector<std::vector<int>> adjacency);

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::span<const int> neighbors(int v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(int u, int v) const;
  /// Every side shared with another tile of the patch.
  bool interior(int v) const { return degree(v) == 4; }
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const P2Graph&, const P2Graph&) = default;

 private:
  std::vector<int> offsets_;
  std::vector<int> targets_;
};

/// Requires a valid patch.
P2Graph build_dual(const Patch& p);
std::vector<int> interior_tiles(const P2Graph& g);

/// True if some vertex has four pairwise non-adjacent neighbours, i.e. an induced
/// tree could contain a vertex of degree 4.
bool has_induced_claw4(const P2Graph& g);

// P2GRAPH v1: "edge <a> <b>" lines (a < b, lexicographic), then "interior <id>" lines.
void write_graph(std::ostream& os, const P2Graph& g);
/// Vertex count is one past the largest id mentioned.
P2Graph read_graph(std::istream& is);
std::string graph_to_string(const P2Graph& g);
P2Graph graph_from_string(const std::string& text);

}  // namespace p2flis
