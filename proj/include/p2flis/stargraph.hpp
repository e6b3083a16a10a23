#pragma once

// Stars, suns, and the star-graph joining neighbouring star centres.

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "p2flis/dualgraph.hpp"

namespace p2flis {

/// Five tiles of one kind meeting tip to tip at `center`.
struct VertexFlower {
  Cyclo10 center;
  std::array<int, 5> tiles{};  // ascending ids
};

struct StarsAndSuns {
  std::vector<VertexFlower> stars;  // five darts
  std::vector<VertexFlower> suns;   // five kites
};

/// Groups whole tiles by tip vertex; only complete five-tile flowers count.
/// Both lists are sorted by centre.
StarsAndSuns detect_stars_and_suns(const Patch& p, const P2Graph& g);

enum class StarColor : std::uint8_t { Red, Green, Blue };
char color_letter(StarColor c);

struct StarVertex {
  Cyclo10 center;
  std::array<int, 5> star_tiles{};
  int sun_count = 0;
  StarColor color = StarColor::Red;
};

/// Star centres joined at the smallest centre-to-centre distance of the patch.
struct StarGraph {
  std::vector<StarVertex> vertices;
  std::vector<std::pair<int, int>> edges;  // i < j, ascending
  GoldenInt edge_norm2;                    // exact squared edge length; 0 without edges

  /// Index of the vertex at `center`, or -1.
  int find(const Cyclo10& center) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
};

/// Throws Error(Invalid) when there are no stars at all.
StarGraph build_star_graph(const Patch& p, const std::vector<VertexFlower>& stars);

/// The one sun-adjacency predicate: some dart of the star shares a side with
/// some kite of the sun.
bool star_touches_sun(const P2Graph& g, const VertexFlower& star, const VertexFlower& sun);
bool star_touches_sun(const P2Graph& g, const StarVertex& star, const VertexFlower& sun);

/// Fills sun counts and colours.  Throws Error(Structural) if a star touches more
/// than two suns.
StarGraph color_star_vertices(StarGraph sg, const std::vector<VertexFlower>& suns, const P2Graph& g);

/// Sizes of the bounded faces of the star-graph embedding whose vertices all lie
/// within `radius` (float, region selection only) of the origin.  Key: vertex count.
std::map<int, int> face_census(const StarGraph& sg, double radius);

/// Detect, connect and colour in one go.
StarGraph star_graph_of(const Patch& p, const P2Graph& g);

// STARGRAPH v1: "vertex <i> <c0 c1 c2 c3> <R|G|B>" lines then "edge <i> <j>" lines.
void write_star_graph(std::ostream& os, const StarGraph& sg);
/// Star tiles and sun counts are not part of the format; sun counts are
/// restored from the colours.
StarGraph read_star_graph(std::istream& is);
std::string star_graph_to_string(const StarGraph& sg);
StarGraph star_graph_from_string(const std::string& text);

}  // namespace p2flis
