#include <doctest.h>

#include <set>

#include "p2flis/error.hpp"
#include "p2flis/geometry.hpp"
#include "p2flis/patch_io.hpp"

using namespace p2flis;

TEST_CASE("seeds") {
  CHECK(seed_patch(SeedKind::Kite).size() == 1);
  CHECK(seed_patch(SeedKind::Kite).all_halves().size() == 2);
  for (auto s : {SeedKind::Kite, SeedKind::Dart, SeedKind::Sun, SeedKind::Star}) {
    const auto p = seed_patch(s);
    CHECK(validate_patch(p).ok());
    CHECK(p.scale_exp == 0);
  }
  const auto sun = seed_patch("sun");
  CHECK(sun.size() == 5);
  for (const auto& t : sun.tiles) {
    CHECK(t.kind == TileKind::Kite);
    CHECK(t.anchor == Cyclo10{});
  }
  CHECK_THROWS_AS(seed_patch("rhombus"), Error);
}

TEST_CASE("prototile outlines") {
  Tile kite{0, TileKind::Kite, {}, 0, 0};
  const auto k = kite.outline();
  CHECK(k[0] == Cyclo10{});
  CHECK(k[1] == Cyclo10::phi() * Cyclo10::zeta_pow(-1));
  CHECK(k[2] == Cyclo10::phi());
  CHECK(k[3] == Cyclo10::phi() * Cyclo10::zeta());
  Tile dart{0, TileKind::Dart, {}, 0, 0};
  const auto d = dart.outline();
  CHECK(d[2] == Cyclo10::one());
  // side lengths: long phi, short 1
  for (const auto& o : {k, d}) {
    CHECK((o[1] - o[0]).norm2() == (Cyclo10::phi() * Cyclo10::phi()).to_golden());
    CHECK((o[2] - o[1]).norm2() == GoldenInt(1, 0));
  }
}

TEST_CASE("half-tile substitution") {
  auto kite = inflate(seed_patch(SeedKind::Kite));
  CHECK(kite.tiles.size() == 2);
  CHECK(kite.loose.size() == 2);
  CHECK(kite.tiles[0].kind == TileKind::Kite);
  CHECK(kite.loose[0].kind == TileKind::Dart);
  auto dart = inflate(seed_patch(SeedKind::Dart));
  CHECK(dart.tiles.size() == 1);
  CHECK(dart.loose.size() == 2);
  CHECK(dart.scale_exp == 1);
}

TEST_CASE("half-tile recurrence and area") {
  for (auto s : {SeedKind::Kite, SeedKind::Dart, SeedKind::Sun, SeedKind::Star}) {
    auto p = seed_patch(s);
    auto c = count_halves(p);
    for (int level = 1; level <= 5; ++level) {
      auto q = inflate(p);
      const auto d = count_halves(q);
      CHECK(d.half_kites == 2 * c.half_kites + c.half_darts);
      CHECK(d.half_darts == c.half_kites + c.half_darts);
      CHECK(twice_area_over_sin36(q) == GoldenInt(1, 1) * twice_area_over_sin36(p));
      p = std::move(q);
      c = d;
    }
  }
  auto p = seed_patch(SeedKind::Sun);
  const HalfTileCounts expect[] = {{10, 0}, {20, 10}, {50, 30}, {130, 80}};
  for (const auto& e : expect) {
    CHECK(count_halves(p) == e);
    p = inflate(p);
  }
}

TEST_CASE("inflated patches stay valid") {
  for (auto s : {SeedKind::Sun, SeedKind::Star, SeedKind::Kite, SeedKind::Dart}) {
    const auto p = inflate(seed_patch(s), 4);
    const auto rep = validate_patch(p);
    CHECK(rep.ok());
    for (const auto& t : p.tiles) {
      const auto o = t.outline();
      for (int e = 0; e < 4; ++e) {
        const auto v = o[(e + 1) % 4] - o[e];
        CHECK((direction_index(v, Cyclo10::one()) >= 0 || direction_index(v, Cyclo10::phi()) >= 0));
      }
    }
  }
}

TEST_CASE("matching-rule violation is detected") {
  // two kites glued along a long edge: tip against side vertex
  Patch p;
  p.tiles.push_back({0, TileKind::Kite, {}, 0, 0});
  Tile b{1, TileKind::Kite, {}, 0, 0};
  const auto a = p.tiles[0].outline();
  // b's long edge (tip -> left side) laid reversed onto a's long edge (tip -> left side)
  b.anchor = a[3];
  b.rotation = 5;
  p.tiles.push_back(b);
  const auto bo = b.outline();
  REQUIRE(bo[0] == a[3]);
  const auto rep = validate_patch(p);
  CHECK(rep.count(ViolationKind::MatchingRule) == 1);
  CHECK(rep.count(ViolationKind::Overlap) == 0);
  CHECK_THROWS_AS(require_valid(p), Error);
}

TEST_CASE("overlap is detected") {
  Patch p;
  p.tiles.push_back({0, TileKind::Kite, {}, 0, 0});
  p.tiles.push_back({1, TileKind::Dart, {}, 0, 0});
  CHECK(validate_patch(p).count(ViolationKind::Overlap) >= 1);
}

TEST_CASE("patch text round trip") {
  const auto p = inflate(seed_patch(SeedKind::Sun), 3);
  const auto text = patch_to_string(p);
  CHECK(text.rfind("P2PATCH v1\nscale 3\n", 0) == 0);
  const auto q = patch_from_string(text);
  CHECK(q.tiles == p.tiles);
  CHECK(patch_to_string(q) == text);
  CHECK_THROWS_AS(patch_from_string("P2PATCH v1\nscale 0\ntile 1 K 0 0 0 0 0 0\n"), Error);
  CHECK_THROWS_AS(patch_from_string("P2PATCH v2\n"), Error);
}
