#pragma once

// Independent reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "p2flis/dualgraph.hpp"

namespace oracle {

// Per order: best leaf count, number of induced trees reaching it, and the
// lexicographically smallest of them.
struct TreeCensus {
  std::vector<int> best;
  std::vector<std::uint64_t> count;
  std::vector<std::vector<int>> first;
};

// ESU enumeration of connected vertex subsets, pruned at the first cycle
// (a cycle in an induced subgraph survives in every superset).
class InducedTreeEsu {
 public:
  InducedTreeEsu(const p2flis::P2Graph& g, int max_order) : g_(g), k_(max_order) {
    census_.best.assign(static_cast<std::size_t>(k_) + 1, -1);
    census_.count.assign(static_cast<std::size_t>(k_) + 1, 0);
    census_.first.assign(static_cast<std::size_t>(k_) + 1, {});
    in_.assign(g.size(), 0);
    near_.assign(g.size(), 0);
  }

  TreeCensus run() {
    for (int v = 0; v < static_cast<int>(g_.size()); ++v) {
      root_ = v;
      add(v);
      std::vector<int> ext;
      for (int u : g_.neighbors(v))
        if (u > v) ext.push_back(u);
      extend(ext);
      remove(v);
    }
    return census_;
  }

 private:
  void add(int v) {
    in_[v] = 1;
    sub_.push_back(v);
    for (int u : g_.neighbors(v)) ++near_[u];
  }
  void remove(int v) {
    in_[v] = 0;
    sub_.pop_back();
    for (int u : g_.neighbors(v)) --near_[u];
  }

  void note() {
    const auto n = sub_.size();
    int leaves = 0;
    if (n >= 2)
      for (int v : sub_) leaves += near_[v] == 1;
    std::vector<int> s = sub_;
    std::sort(s.begin(), s.end());
    if (leaves > census_.best[n]) {
      census_.best[n] = leaves;
      census_.count[n] = 0;
      census_.first[n] = s;
    }
    if (leaves == census_.best[n]) {
      ++census_.count[n];
      if (s < census_.first[n]) census_.first[n] = s;
    }
  }

  void extend(std::vector<int> ext) {
    note();
    if (static_cast<int>(sub_.size()) == k_) return;
    while (!ext.empty()) {
      const int w = ext.back();
      ext.pop_back();
      if (near_[w] != 1) continue;  // joining would close a cycle
      std::vector<int> next = ext;
      for (int u : g_.neighbors(w))
        if (u > root_ && !in_[u] && near_[u] == 0 &&
            std::find(next.begin(), next.end(), u) == next.end())
          next.push_back(u);
      add(w);
      extend(std::move(next));
      remove(w);
    }
  }

  const p2flis::P2Graph& g_;
  int k_;
  int root_ = 0;
  std::vector<int> sub_;
  std::vector<char> in_;
  std::vector<int> near_;
  TreeCensus census_;
};

inline TreeCensus induced_tree_census(const p2flis::P2Graph& g, int max_order) {
  return InducedTreeEsu(g, max_order).run();
}

}  // namespace oracle
