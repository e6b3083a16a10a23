#pragma once

// Fully leafed induced subtrees grouped into isometry classes.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "p2flis/search.hpp"

namespace p2flis {

enum class SignatureMode {
  WholeTree,      // every tile, so leaf choices split classes
  InternalTiles,  // internal tiles only, "up to choice of leaves"
};

struct FlisQuery {
  int n = 0;
  std::optional<int> internal_tiles;  // keep only witnesses with this many internal tiles
  SignatureMode mode = SignatureMode::WholeTree;
};

struct FlisClass {
  std::string signature;
  std::vector<int> representative;  // lexicographically first witness
  std::size_t instances = 0;
};

struct FlisCensus {
  int n = 0;
  int max_leaves = 0;
  std::size_t witnesses = 0;  // after the internal-tile filter
  std::vector<FlisClass> classes;  // sorted by signature
};

/// Every fully leafed induced subtree of order n in the patch, grouped by
/// canonical geometric signature.  The witness cap in `budget` is ignored.
/// Throws Error(Budget) if the search cannot finish.
FlisCensus enumerate_flis(const Patch& p, const P2Graph& g, const FlisQuery& q, SearchBudget budget = {});

}  // namespace p2flis
