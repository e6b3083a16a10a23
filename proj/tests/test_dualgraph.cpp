#include <doctest.h>

#include <algorithm>
#include <set>

#include "p2flis/dualgraph.hpp"
#include "p2flis/error.hpp"

using namespace p2flis;

namespace {
// Two tiles are adjacent when they have two common corners that are consecutive in both outlines.
std::size_t brute_edge_count(const Patch& p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const auto a = p.tiles[i].outline(), b = p.tiles[j].outline();
      bool shared = false;
      for (int e = 0; e < 4 && !shared; ++e)
        for (int f = 0; f < 4; ++f)
          if (a[e] == b[(f + 1) % 4] && a[(e + 1) % 4] == b[f]) shared = true;
      n += shared;
    }
  return n;
}
}  // namespace

TEST_CASE("small duals") {
  CHECK(build_dual(seed_patch(SeedKind::Kite)).size() == 1);
  CHECK(build_dual(seed_patch(SeedKind::Kite)).edge_count() == 0);
  const auto sun = build_dual(seed_patch(SeedKind::Sun));
  CHECK(sun.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(sun.degree(v) == 2);
  CHECK(interior_tiles(sun).empty());
}

TEST_CASE("dual of inflated sun matches the brute-force edge oracle") {
  for (int level = 1; level <= 4; ++level) {
    const auto p = inflate(seed_patch(SeedKind::Sun), level);
    const auto g = build_dual(p);
    CHECK(g.edge_count() == brute_edge_count(p));
    for (int v = 0; v < static_cast<int>(g.size()); ++v) CHECK(g.degree(v) <= 4);
  }
  const auto g = build_dual(inflate(seed_patch(SeedKind::Sun), 4));
  const auto in = interior_tiles(g);
  CHECK(!in.empty());
  for (int v : in) CHECK(g.degree(v) == 4);
  CHECK_FALSE(has_induced_claw4(g));
}

TEST_CASE("graph text round trip") {
  const auto g = build_dual(inflate(seed_patch(SeedKind::Sun), 3));
  const auto text = graph_to_string(g);
  CHECK(graph_from_string(text) == g);
  CHECK(graph_to_string(graph_from_string(text)) == text);
  CHECK_THROWS_AS(graph_from_string("P2GRAPH v1\nedge 2 1\n"), Error);
}
