#include "p2flis/subtree.hpp"

#include <algorithm>

#include "p2flis/error.hpp"

namespace p2flis {

std::vector<std::pair<int, int>> induced_edges(const P2Graph& g, std::span<const int> sorted_tiles) {
  std::vector<std::pair<int, int>> out;
  for (int v : sorted_tiles)
    for (int w : g.neighbors(v))
      if (v < w && std::binary_search(sorted_tiles.begin(), sorted_tiles.end(), w)) out.emplace_back(v, w);
  return out;
}

bool induces_tree(const P2Graph& g, std::span<const int> tiles) {
  std::vector<int> s(tiles.begin(), tiles.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  for (int v : s)
    if (v < 0 || v >= static_cast<int>(g.size())) return false;
  if (s.size() <= 1) return true;
  if (induced_edges(g, s).size() != s.size() - 1) return false;
  // connected?
  std::vector<char> seen(s.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = s[stack.back()];
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      const auto it = std::lower_bound(s.begin(), s.end(), w);
      if (it == s.end() || *it != w) continue;
      const auto i = static_cast<std::size_t>(it - s.begin());
      if (!seen[i]) {
        seen[i] = 1;
        ++reached;
        stack.push_back(i);
      }
    }
  }
  return reached == s.size();
}

InducedSubtree::InducedSubtree(const P2Graph& g, std::vector<int> tiles) : tiles_(std::move(tiles)) {
  std::sort(tiles_.begin(), tiles_.end());
  if (!induces_tree(g, tiles_)) fail(ErrorKind::Invalid, "tile set does not induce a tree");
  degrees_.assign(tiles_.size(), 0);
  for (auto [a, b] : induced_edges(g, tiles_)) {
    ++degrees_[static_cast<std::size_t>(std::lower_bound(tiles_.begin(), tiles_.end(), a) - tiles_.begin())];
    ++degrees_[static_cast<std::size_t>(std::lower_bound(tiles_.begin(), tiles_.end(), b) - tiles_.begin())];
  }
}

bool InducedSubtree::contains(int tile) const { return std::binary_search(tiles_.begin(), tiles_.end(), tile); }

int InducedSubtree::degree(int tile) const {
  const auto it = std::lower_bound(tiles_.begin(), tiles_.end(), tile);
  if (it == tiles_.end() || *it != tile) return 0;
  return degrees_[static_cast<std::size_t>(it - tiles_.begin())];
}

int InducedSubtree::leaf_count() const {
  return static_cast<int>(std::count(degrees_.begin(), degrees_.end(), 1));
}

std::vector<int> InducedSubtree::leaves() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < tiles_.size(); ++i)
    if (degrees_[i] == 1) out.push_back(tiles_[i]);
  return out;
}

std::vector<int> InducedSubtree::internal() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < tiles_.size(); ++i)
    if (degrees_[i] >= 2) out.push_back(tiles_[i]);
  return out;
}

}  // namespace p2flis
