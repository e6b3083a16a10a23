#include <doctest.h>

#include <algorithm>
#include <map>

#include "p2flis/error.hpp"
#include "p2flis/inflation_lab.hpp"
#include "p2flis/leaf_function.hpp"
#include "p2flis/search.hpp"

using namespace p2flis;

namespace {
const Tiling& tiling(int k) {
  static std::map<int, Tiling> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, make_tiling(inflate(seed_patch(SeedKind::Sun), k))).first;
  return it->second;
}

CaterpillarChain chain_of(const Tiling& tl, const std::vector<int>& tiles) {
  auto c = decompose(tl.graph, InducedSubtree(tl.graph, tiles));
  analyze_chain(tl, c);
  return c;
}
}  // namespace

TEST_CASE("prime index") {
  const auto& tl = tiling(6);
  const auto idx = index_primes(tl);
  REQUIRE(!idx.entries.empty());
  for (std::size_t e = 0; e < idx.entries.size(); ++e) {
    const auto& en = idx.entries[e];
    CHECK(en.chain.size() == kPrimeInternal);
    REQUIRE(en.class_id >= 1);
    CHECK(en.angle == prime_catalogue()[static_cast<std::size_t>(en.class_id) - 1].angle);
    bool front = false, back = false;
    for (auto [i, is_back] : idx.by_end[static_cast<std::size_t>(en.chain.front())])
      front |= i == static_cast<int>(e) && !is_back;
    for (auto [i, is_back] : idx.by_end[static_cast<std::size_t>(en.chain.back())])
      back |= i == static_cast<int>(e) && is_back;
    CHECK(front);
    CHECK(back);
  }
}

TEST_CASE("assembling a single prime gives an order-18 fully leafed tree") {
  const auto& tl = tiling(6);
  const auto idx = index_primes(tl);
  int done = 0;
  for (const auto& en : idx.entries) {
    const std::vector<std::vector<int>> chains{en.chain};
    const auto tiles = assemble_caterpillar(tl.graph, chains, {});
    if (!tiles) continue;
    const InducedSubtree t(tl.graph, *tiles);
    CHECK(t.order() == kPrimeOrder);
    CHECK(t.leaf_count() == kPrimeLeaves);
    if (++done == 50) break;
  }
  CHECK(done == 50);
}

TEST_CASE("grow_context") {
  const auto& tl = tiling(5);
  SearchBudget b;
  b.witness_cap = 1;
  const auto w = search_max_leaves(tl.graph, kPrimeOrder, b).witnesses;
  REQUIRE(w.size() == 1);
  const auto c = chain_of(tl, w[0]);
  REQUIRE(c.primes[0].star >= 0);
  const auto gc = grow_context(tl, c, 1);
  CHECK(gc.steps == 1);
  CHECK(gc.scale == phi_pow(1));
  const auto before = count_halves(tl.patch);
  const auto after = count_halves(gc.tiling.patch);
  CHECK(after.half_kites == 2 * before.half_kites + before.half_darts);
  CHECK(after.half_darts == before.half_kites + before.half_darts);
  REQUIRE(gc.star_chain.size() == 1);
  const auto old_center = tl.stars.vertices[static_cast<std::size_t>(c.primes[0].star)].center;
  CHECK(gc.star_chain[0] == gc.map(old_center));
  CHECK(gc.map(old_center) == phi_pow(1) * old_center);
  CHECK(!gc.region.empty());
  CHECK(gc.region.size() > c.tiles.size());
  const auto mask = region_mask(gc.tiling, gc.region, 0.0);
  for (int r : gc.region) CHECK(mask[static_cast<std::size_t>(r)]);
  CHECK_THROWS_AS(grow_context(tl, c, 0), Error);
}

TEST_CASE("a central cape 4 extends three primes each way") {
  const auto& tl = tiling(8);
  const auto idx = index_primes(tl);
  const auto seed = find_chain(tl, idx, "648", {}, Cyclo10{});
  REQUIRE(seed);
  // chains come back in spine orientation, so the word may read backwards
  CHECK((angle_word(*seed) == "648" || angle_word(*seed) == "846"));
  CHECK(forbidden_patterns(*seed).empty());
  ExtendBudget eb;
  eb.node_limit = 100000;
  const auto rep = extend_chain(tl, idx, *seed, {}, eb);
  CHECK(rep.met);
  CHECK(rep.left_max >= 3);
  CHECK(rep.right_max >= 3);
  CHECK(!rep.partial);
  const auto& best = rep.best;
  CHECK(best.primes.size() == 9);
  CHECK(sides_alternate(side_sequence(best)));
  const auto seas = detect_sea_caterpillars(best);
  CHECK(std::any_of(seas.begin(), seas.end(), [](const SeaCaterpillar& s) { return s.kind == "cape4"; }));
  CHECK(angle_word(best).find("44") == std::string::npos);
  const InducedSubtree t(tl.graph, best.tiles);
  CHECK(t.leaf_count() == static_cast<int>(leaf_function(static_cast<std::int64_t>(t.order()))));
}

TEST_CASE("a 4,4 seed is rejected and never occurs") {
  const auto& tl = tiling(7);
  const auto idx = index_primes(tl);
  CHECK(!find_chain(tl, idx, "44"));
  CaterpillarChain fake;
  fake.shape = 2;
  fake.primes.resize(2);
  for (auto& p : fake.primes) {
    p.angle = 4;
    p.class_id = 3;
  }
  const auto rep = extend_chain(tl, idx, fake);
  CHECK(rep.rejected);
  CHECK(rep.nodes == 0);
  CHECK(!rep.met);
}

TEST_CASE("EXTEND round trip") {
  ExtendFile f;
  f.seed = "seed.chain";
  f.left_max = 3;
  f.right_max = 2;
  f.target = 3;
  f.met = false;
  f.chain.order = 3;
  f.chain.shape = 2;
  f.chain.tiles = {1, 2, 3};
  f.chain.primes = {{4, 8, Side::Left}, {2, 6, Side::Right}};
  f.chain.colors = "RG";
  f.chain.angles = "86";
  const auto text = extend_to_string(f);
  const auto back = extend_from_string(text);
  CHECK(back == f);
  CHECK(extend_to_string(back) == text);
  CHECK_THROWS_AS(extend_from_string("EXTEND v1\nseed x\nleftmax 1\n"), Error);
}
