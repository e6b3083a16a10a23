#pragma once

// Growing patches around a caterpillar and extending saturated chains one
// prime at a time.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "p2flis/caterpillar.hpp"

namespace p2flis {

/// A patch inflated `steps` times with the old chain located inside it.
struct GrownContext {
  Tiling tiling;
  int steps = 0;
  Cyclo10 scale;                    // phi^steps: old stored coordinates to new ones
  std::vector<int> region;          // new tiles whose centroid lies on an old chain tile
  std::vector<Cyclo10> star_chain;  // old own-star centres, mapped

  Cyclo10 map(const Cyclo10& z) const { return scale * z; }
};

GrownContext grow_context(const Tiling& tl, const CaterpillarChain& c, int steps);

/// Tiles within `margin` of the disc around `region` (floating point, used only
/// to choose where to search).
std::vector<char> region_mask(const Tiling& tl, std::span<const int> region, double margin);

/// Every prime chain of a patch whose own star is present, measured once in
/// its spine orientation.
struct PrimeIndex {
  struct Entry {
    std::vector<int> chain;
    int class_id = 0;
    int angle = 0;
    Side side = Side::Left;  // for `chain` as stored; reversed chains flip it
  };
  std::vector<Entry> entries;
  std::vector<std::vector<std::pair<int, bool>>> by_end;  // tile -> (entry, tile is chain.back())
  std::vector<char> allowed;                              // one flag per tile
};
/// `allowed` (empty = all tiles) limits where primes may lie.
PrimeIndex index_primes(const Tiling& tl, std::span<const char> allowed = {});

struct ExtendBudget {
  std::uint64_t node_limit = 0;  // 0: unlimited
  double time_limit_s = 0.0;     // 0: unlimited
};

struct ExtendOptions {
  int target = 3;              // primes to add on each side
  bool prune_patterns = true;  // refuse steps that create a 44 pair, a PC1 or a closed cape 2 or 3
};

struct ExtendReport {
  int left_max = 0;   // primes added before the seed in the best chain
  int right_max = 0;  // primes added after it
  int target = 0;
  bool met = false;
  bool partial = false;   // budget ran out
  bool rejected = false;  // seed refused before searching
  std::string reason;
  std::uint64_t nodes = 0;
  CaterpillarChain best;  // analysed
};

/// Depth-first extension: the right side first, then the left, candidates in
/// (angle, side, tiles) order.  Every accepted step keeps the chain an induced
/// saturated caterpillar with alternating sides.  A seed with two consecutive
/// 4 angles is rejected without searching.
ExtendReport extend_chain(const Tiling& tl, const PrimeIndex& idx, const CaterpillarChain& seed,
                          const ExtendOptions& opt = {}, const ExtendBudget& budget = {});

/// First saturated chain whose angle word equals `angles`.  Starting primes are
/// tried in index order, or nearest first when `focus` is given.
std::optional<CaterpillarChain> find_chain(const Tiling& tl, const PrimeIndex& idx, std::string_view angles,
                                           const ExtendBudget& budget = {}, std::optional<Cyclo10> focus = {});
/// Up to `limit` distinct such chains, at most one per starting prime.
std::vector<CaterpillarChain> find_chains(const Tiling& tl, const PrimeIndex& idx, std::string_view angles,
                                          std::size_t limit, const ExtendBudget& budget = {},
                                          std::optional<Cyclo10> focus = {});

/// Saturated caterpillar from an ordered list of prime chains joined at the
/// given junction tiles.  Returns nothing if no choice of leaves makes the
/// union an induced tree.
std::optional<std::vector<int>> assemble_caterpillar(const P2Graph& g, std::span<const std::vector<int>> chains,
                                                     std::span<const int> junctions,
                                                     std::span<const char> allowed = {});

// EXTEND v1: "seed <path>", "leftmax <l> rightmax <r> target <t> met <0|1>",
// then the best chain as a CHAIN v1 block.
struct ExtendFile {
  std::string seed;
  int left_max = 0;
  int right_max = 0;
  int target = 0;
  bool met = false;
  ChainReport chain;
  friend bool operator==(const ExtendFile&, const ExtendFile&) = default;
};
void write_extend(std::ostream& os, const ExtendFile& f);
ExtendFile read_extend(std::istream& is);
std::string extend_to_string(const ExtendFile& f);
ExtendFile extend_from_string(const std::string& text);

}  // namespace p2flis
