#pragma once

// Kite and dart patches with exact coordinates, built by half-tile substitution.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "p2flis/cyclo.hpp"

namespace p2flis {

enum class TileKind : std::uint8_t { Kite, Dart };
enum class Chirality : std::uint8_t { Left, Right };
/// Matching-rule vertex colour; shared edges must join equal colours.
enum class VertexColor : std::uint8_t { Black, White };

char kind_letter(TileKind k);

/// Length of the tip-to-axis-end segment at stored scale: phi for kites, 1 for darts.
Cyclo10 axis_length(TileKind k);

/// One Robinson triangle: the half of a kite or dart on one side of its axis.
///
/// Half-kite: sides tip-side = phi, tip-axis = phi, side-axis = 1 (36-72-72).
/// Half-dart: sides tip-side = phi, tip-axis = 1, side-axis = 1 (36-36-108).
struct HalfTile {
  TileKind kind = TileKind::Kite;
  Cyclo10 tip;
  Cyclo10 side;
  Cyclo10 axis_end;  // tail of a kite, reflex corner of a dart

  Chirality chirality() const;
  std::array<Cyclo10, 3> vertices() const { return {tip, side, axis_end}; }
  GoldenInt twice_area_over_sin36() const;  // always positive

  friend bool operator==(const HalfTile&, const HalfTile&) = default;
};

/// A whole prototile.  Outline corners in counter-clockwise order are
/// tip, right side, axis end, left side; the axis points along zeta^rotation.
struct Tile {
  int id = 0;
  TileKind kind = TileKind::Kite;
  Cyclo10 anchor;  // tip vertex
  int rotation = 0;
  int mirror = 0;  // both prototiles are mirror symmetric; kept for the file format

  std::array<Cyclo10, 4> outline() const;
  std::array<HalfTile, 2> halves() const;
  /// Colour of outline corner i (0 tip, 1 and 3 sides, 2 axis end).
  VertexColor corner_color(int i) const;
  /// Sum of the four corners; four times the vertex centroid.
  Cyclo10 corner_sum() const;

  friend bool operator==(const Tile&, const Tile&) = default;
};

/// Finite set of tiles.  True coordinates are stored ones times phi^-scale_exp;
/// stored tiles always have long edge phi and short edge 1.
struct Patch {
  std::vector<Tile> tiles;       // ids dense from 0 in vector order
  std::vector<HalfTile> loose;   // boundary half-tiles whose mirror half is outside
  int scale_exp = 0;

  const Tile& tile(int id) const { return tiles.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return tiles.size(); }
  /// Every half-tile: two per whole tile plus the loose ones.
  std::vector<HalfTile> all_halves() const;
};

enum class SeedKind { Kite, Dart, Sun, Star };
SeedKind parse_seed(std::string_view name);
std::string_view seed_name(SeedKind s);

Patch seed_patch(SeedKind s);
inline Patch seed_patch(std::string_view name) { return seed_patch(parse_seed(name)); }

/// Substitute a half-tile after scaling by phi: a half-kite yields two half-kites
/// and a half-dart, a half-dart one of each.
std::vector<HalfTile> substitute(const HalfTile& h);

/// Pair mirror halves into whole tiles; unpaired halves stay loose.  Tiles are
/// numbered in ascending (anchor, rotation, kind) order.
Patch merge_halves(const std::vector<HalfTile>& halves, int scale_exp);

/// One substitution step on every half-tile, stored coordinates scaled by phi.
Patch inflate(const Patch& p);
Patch inflate(const Patch& p, int steps);

struct HalfTileCounts {
  std::int64_t half_kites = 0;
  std::int64_t half_darts = 0;
  friend bool operator==(const HalfTileCounts&, const HalfTileCounts&) = default;
};
HalfTileCounts count_halves(const Patch& p);

/// Total area of all half-tiles in stored units, divided by sin(36 deg) / 2.
GoldenInt twice_area_over_sin36(const Patch& p);

enum class ViolationKind { Overlap, PartialEdge, MatchingRule, BadShape };
std::string_view violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  int tile_a = -1;
  int tile_b = -1;
  std::string detail;
};

struct ValidityReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind k) const;
};

/// Checks tile shapes, pairwise interior overlap, vertices inside foreign edges,
/// and vertex colours at every shared edge.
ValidityReport validate_patch(const Patch& p);

/// Throws Error(Invalid) with the first violation if the patch is not valid.
void require_valid(const Patch& p);

}  // namespace p2flis
