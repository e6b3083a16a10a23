#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "p2flis/error.hpp"
#include "p2flis/flis.hpp"

using namespace p2flis;

namespace {
// Independent isometry invariant: tile kinds plus the sorted multiset of all
// corner-to-corner distances, rounded.
std::vector<long> distance_invariant(const Patch& p, const std::vector<int>& ids) {
  std::vector<std::complex<double>> pts;
  std::vector<long> out;
  for (int id : ids) {
    const auto& t = p.tiles[static_cast<std::size_t>(id)];
    out.push_back(t.kind == TileKind::Kite ? -1 : -2);
    for (const auto& c : t.outline()) pts.push_back(c.embed());
  }
  std::sort(out.begin(), out.end());
  std::vector<long> d;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d.push_back(std::lround(std::abs(pts[i] - pts[j]) * 1e6));
  std::sort(d.begin(), d.end());
  out.insert(out.end(), d.begin(), d.end());
  return out;
}
}  // namespace

TEST_CASE("single tiles: one class per prototile") {
  const auto p = inflate(seed_patch(SeedKind::Sun), 4);
  const auto g = build_dual(p);
  const auto c = enumerate_flis(p, g, {1});
  CHECK(c.max_leaves == 0);
  CHECK(c.witnesses == p.size());
  REQUIRE(c.classes.size() == 2);
  std::size_t total = 0;
  for (const auto& k : c.classes) total += k.instances;
  CHECK(total == p.size());
}

TEST_CASE("class counts agree with a distance-multiset oracle") {
  const auto p = inflate(seed_patch(SeedKind::Sun), 4);
  const auto g = build_dual(p);
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const auto c = enumerate_flis(p, g, {n});
    SearchBudget b;
    b.witness_cap = 0;
    const auto all = search_max_leaves(g, n, b).witnesses;
    CHECK(c.witnesses == all.size());
    std::set<std::vector<long>> inv;
    for (const auto& w : all) inv.insert(distance_invariant(p, w));
    CHECK(c.classes.size() == inv.size());
    for (const auto& k : c.classes) CHECK(k.representative.size() == static_cast<std::size_t>(n));
  }
  // frozen from the level-4 sun patch
  CHECK(enumerate_flis(p, g, {2}).classes.size() == 5);
}

TEST_CASE("internal-tile mode groups leaf choices") {
  const auto p = inflate(seed_patch(SeedKind::Sun), 6);
  const auto g = build_dual(p);
  const auto whole = enumerate_flis(p, g, {18});
  const auto inner = enumerate_flis(p, g, {18, 8, SignatureMode::InternalTiles});
  CHECK(whole.witnesses == 1370);
  CHECK(inner.witnesses == 1370);
  CHECK(inner.classes.size() == 6);
  CHECK(whole.classes.size() >= inner.classes.size());
  // an internal-tile count that no witness has
  CHECK(enumerate_flis(p, g, {18, 3}).witnesses == 0);
}

TEST_CASE("a budget that cannot finish is an error") {
  const auto p = inflate(seed_patch(SeedKind::Sun), 6);
  const auto g = build_dual(p);
  SearchBudget b;
  b.node_limit = 10;
  CHECK_THROWS_AS(enumerate_flis(p, g, {20}, b), Error);
}
