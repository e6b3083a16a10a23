#pragma once

// Isometry-invariant signatures of tile configurations.

#include <span>
#include <string>
#include <vector>

#include "p2flis/geometry.hpp"

namespace p2flis {

struct PlacedTile {
  TileKind kind = TileKind::Kite;
  Cyclo10 anchor;
  int rotation = 0;

  friend auto operator<=>(const PlacedTile&, const PlacedTile&) = default;
};

inline PlacedTile placed(const Tile& t) { return {t.kind, t.anchor, t.rotation}; }

/// One of the 20 symmetries of the decagon: z -> zeta^rotation * (mirror ? conj(z) : z).
struct PlaneIsometry {
  int rotation = 0;
  bool mirror = false;

  Cyclo10 apply(const Cyclo10& z) const;
  PlacedTile apply(const PlacedTile& t) const;
};

/// Canonical text form of a set of tiles and marked points, invariant under
/// translations, rotations by multiples of 36 degrees and reflections.  Works in
/// stored coordinates, where tiles have the same size at every patch level.
std::string canonical_signature(std::span<const PlacedTile> tiles, std::span<const Cyclo10> marks = {});

/// Signature of the given tiles of a patch.
std::string tile_set_signature(const Patch& p, std::span<const int> ids, std::span<const Cyclo10> marks = {});

}  // namespace p2flis
