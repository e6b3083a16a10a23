#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "p2flis/cyclo.hpp"
#include "p2flis/error.hpp"
#include "p2flis/stargraph.hpp"

using namespace p2flis;

namespace {
struct Level {
  Patch patch;
  P2Graph graph;
  StarsAndSuns flowers;
  StarGraph stars;
};
const Level& level(int k) {
  static std::map<int, Level> cache;
  auto it = cache.find(k);
  if (it == cache.end()) {
    Level l;
    l.patch = inflate(seed_patch(SeedKind::Sun), k);
    l.graph = build_dual(l.patch);
    l.flowers = detect_stars_and_suns(l.patch, l.graph);
    l.stars = star_graph_of(l.patch, l.graph);
    it = cache.emplace(k, std::move(l)).first;
  }
  return it->second;
}

// Vertex-incidence oracle: a point is a star (sun) centre when exactly five
// darts (kites) have their tip there.
std::pair<std::size_t, std::size_t> count_flowers(const Patch& p) {
  std::map<std::array<std::int64_t, 4>, std::array<int, 2>> tips;
  for (const auto& t : p.tiles) {
    const auto& a = t.anchor;
    ++tips[{a.c[0], a.c[1], a.c[2], a.c[3]}][t.kind == TileKind::Dart ? 1 : 0];
  }
  std::size_t stars = 0, suns = 0;
  for (const auto& [pt, n] : tips) {
    stars += n[1] == 5;
    suns += n[0] == 5;
  }
  return {stars, suns};
}
}  // namespace

TEST_CASE("seed flowers") {
  const auto sun = seed_patch(SeedKind::Sun);
  const auto sf = detect_stars_and_suns(sun, build_dual(sun));
  CHECK(sf.suns.size() == 1);
  CHECK(sf.stars.empty());
  CHECK_THROWS_AS(build_star_graph(sun, sf.stars), Error);
  const auto star = seed_patch(SeedKind::Star);
  const auto g = build_dual(star);
  const auto st = detect_stars_and_suns(star, g);
  REQUIRE(st.stars.size() == 1);
  CHECK(st.stars[0].center == Cyclo10{});
  const auto sg = build_star_graph(star, st.stars);
  CHECK(sg.vertices.size() == 1);
  CHECK(sg.edges.empty());
}

TEST_CASE("flower counts match the vertex-incidence oracle") {
  for (int k = 3; k <= 7; ++k) {
    CAPTURE(k);
    const auto& l = level(k);
    const auto [stars, suns] = count_flowers(l.patch);
    CHECK(l.flowers.stars.size() == stars);
    CHECK(l.flowers.suns.size() == suns);
  }
}

TEST_CASE("star darts form a five-cycle in the dual graph") {
  const auto& l = level(6);
  for (const auto& s : l.flowers.stars) {
    for (int t : s.tiles) {
      int inside = 0;
      for (int u : l.graph.neighbors(t)) inside += std::count(s.tiles.begin(), s.tiles.end(), u) > 0;
      CHECK(inside == 2);
    }
  }
}

TEST_CASE("star-graph edges are equilateral") {
  const auto& sg = level(7).stars;
  REQUIRE(!sg.edges.empty());
  // edge length phi^4 in stored units
  CHECK(sg.edge_norm2 == (phi_pow(4) * phi_pow(4)).to_golden());
  for (auto [i, j] : sg.edges) {
    CHECK(i < j);
    CHECK((sg.vertices[static_cast<std::size_t>(i)].center - sg.vertices[static_cast<std::size_t>(j)].center).norm2() ==
          sg.edge_norm2);
  }
  for (std::size_t v = 0; v < sg.vertices.size(); ++v) CHECK(sg.find(sg.vertices[v].center) == static_cast<int>(v));
  CHECK(sg.find(Cyclo10{1, 1, 1, 1}) == -1);
}

TEST_CASE("sun counts and colours") {
  for (int k = 6; k <= 7; ++k) {
    const auto& sg = level(k).stars;
    for (const auto& v : sg.vertices) {
      CHECK(v.sun_count >= 0);
      CHECK(v.sun_count <= 2);
      CHECK(v.color == std::array{StarColor::Red, StarColor::Green, StarColor::Blue}[static_cast<std::size_t>(v.sun_count)]);
    }
  }
  // frozen from the level-7 sun patch
  std::array<int, 3> by_count{};
  for (const auto& v : level(7).stars.vertices) ++by_count[static_cast<std::size_t>(v.sun_count)];
  CHECK(by_count == std::array{16, 35, 60});
}

TEST_CASE("faces are hexagons, boats and stars") {
  const auto faces = face_census(level(7).stars, 1e9);
  CHECK(faces == std::map<int, int>{{6, 15}, {8, 10}, {10, 5}});
  for (const auto& [size, n] : face_census(level(6).stars, 1e9)) CHECK(std::set{6, 8, 10}.count(size) == 1);
}

TEST_CASE("STARGRAPH round trip") {
  const auto& sg = level(6).stars;
  const auto text = star_graph_to_string(sg);
  const auto back = star_graph_from_string(text);
  CHECK(star_graph_to_string(back) == text);
  CHECK(back.edges == sg.edges);
  CHECK(back.edge_norm2 == sg.edge_norm2);
  for (std::size_t v = 0; v < sg.vertices.size(); ++v) {
    CHECK(back.vertices[v].center == sg.vertices[v].center);
    CHECK(back.vertices[v].sun_count == sg.vertices[v].sun_count);
  }
  CHECK_THROWS_AS(star_graph_from_string("STARGRAPH v2\n"), Error);
  CHECK_THROWS_AS(star_graph_from_string("STARGRAPH v1\nvertex 0 0 0 0 0 X\n"), Error);
}
