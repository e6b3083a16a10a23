#include "p2flis/caterpillar.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "p2flis/canonical.hpp"
#include "p2flis/embedded_data.hpp"
#include "p2flis/error.hpp"
#include "p2flis/leaf_function.hpp"
#include "p2flis/search.hpp"
#include "p2flis/text_io.hpp"

namespace p2flis {

Tiling make_tiling(Patch p) {
  Tiling tl;
  tl.graph = build_dual(p);
  tl.patch = std::move(p);
  tl.flowers = detect_stars_and_suns(tl.patch, tl.graph);
  tl.stars = color_star_vertices(build_star_graph(tl.patch, tl.flowers.stars), tl.flowers.suns, tl.graph);
  tl.star_of_tile.assign(tl.patch.size(), -1);
  for (std::size_t i = 0; i < tl.stars.vertices.size(); ++i)
    for (int d : tl.stars.vertices[i].star_tiles) tl.star_of_tile[static_cast<std::size_t>(d)] = static_cast<int>(i);
  return tl;
}

char side_letter(Side s) { return s == Side::Left ? 'L' : 'R'; }

InducedSubtree derive(const P2Graph& g, const InducedSubtree& t) { return InducedSubtree(g, t.internal()); }

bool is_caterpillar(const P2Graph& g, const InducedSubtree& t) {
  const auto d = derive(g, t);
  const auto deg = d.degrees();
  return std::all_of(deg.begin(), deg.end(), [](int x) { return x <= 2; });
}

std::vector<int> spine(const P2Graph& g, const InducedSubtree& t) {
  const auto d = derive(g, t);
  if (d.order() == 0) return {};
  if (d.order() == 1) return d.tiles();
  std::vector<int> ends;
  for (std::size_t i = 0; i < d.order(); ++i) {
    if (d.degrees()[i] > 2) fail(ErrorKind::Invalid, "tree is not a caterpillar");
    if (d.degrees()[i] == 1) ends.push_back(d.tiles()[i]);
  }
  std::vector<int> path{std::min(ends[0], ends[1])};
  int prev = -1;
  while (path.size() < d.order()) {
    const int v = path.back();
    int next = -1;
    for (int w : g.neighbors(v))
      if (w != prev && d.contains(w)) next = w;
    prev = v;
    path.push_back(next);
  }
  return path;
}

std::string prime_signature(const Patch& p, std::span<const int> chain) { return tile_set_signature(p, chain); }

const std::vector<PrimeClass>& prime_catalogue() {
  static const std::vector<PrimeClass> catalogue = [] {
    std::vector<PrimeClass> out;
    std::istringstream is(embedded::kPrimeClasses);
    for (std::string line; std::getline(is, line);) {
      const auto w = textio::split(line);
      if (w.empty() || w[0][0] == '#') continue;
      if (w.size() != 3) fail(ErrorKind::Invalid, "prime catalogue: malformed line '" + line + "'");
      out.push_back({static_cast<int>(textio::to_int(w[0], "prime catalogue")),
                     static_cast<int>(textio::to_int(w[1], "prime catalogue")), w[2]});
    }
    return out;
  }();
  return catalogue;
}

int prime_class_of_chain(const Patch& p, std::span<const int> chain) {
  const auto sig = prime_signature(p, chain);
  for (const auto& c : prime_catalogue())
    if (c.signature == sig) return c.id;
  return 0;
}

PrimeCaterpillar make_prime(const P2Graph& g, const InducedSubtree& t) {
  if (t.order() != kPrimeOrder || t.leaf_count() != kPrimeLeaves) fail(ErrorKind::Invalid, "not a prime caterpillar: wrong order or leaf count");
  const auto in = t.internal();
  if (in.size() != kPrimeInternal) fail(ErrorKind::Invalid, "not a prime caterpillar: needs eight internal tiles");
  for (int v : in)
    if (t.degree(v) != 3) fail(ErrorKind::Invalid, "not a prime caterpillar: internal tile of degree " + std::to_string(t.degree(v)));
  PrimeCaterpillar pc;
  pc.chain = spine(g, t);
  pc.tiles = t.tiles();
  return pc;
}

int classify_prime(const Patch& p, const P2Graph& g, const InducedSubtree& t) {
  const auto pc = make_prime(g, t);
  const int id = prime_class_of_chain(p, pc.chain);
  if (id == 0) fail(ErrorKind::Structural, "prime caterpillar outside the six known classes");
  return id;
}

InducedSubtree graft(const P2Graph& g, const InducedSubtree& a, const InducedSubtree& b, int t) {
  std::vector<int> common;
  std::set_intersection(a.tiles().begin(), a.tiles().end(), b.tiles().begin(), b.tiles().end(),
                        std::back_inserter(common));
  if (common.size() != 1 || common[0] != t) fail(ErrorKind::Invalid, "graft: the trees must meet in exactly the graft tile");
  if (a.degree(t) != 1 || b.degree(t) != 1) fail(ErrorKind::Invalid, "graft: the graft tile must be a leaf of both trees");
  std::vector<int> u;
  std::set_union(a.tiles().begin(), a.tiles().end(), b.tiles().begin(), b.tiles().end(), std::back_inserter(u));
  if (!induces_tree(g, u)) fail(ErrorKind::Invalid, "graft: the union is not an induced tree");
  InducedSubtree out(g, std::move(u));
  if (out.leaf_count() != leaf_function(static_cast<std::int64_t>(out.order())))
    fail(ErrorKind::Invalid, "graft: the union is not fully leafed");
  return out;
}

int own_star(const Tiling& tl, std::span<const int> chain) {
  std::set<int> found;
  for (int v : chain)
    for (int w : tl.graph.neighbors(v))
      if (tl.star_of_tile[static_cast<std::size_t>(w)] >= 0) found.insert(tl.star_of_tile[static_cast<std::size_t>(w)]);
  if (found.empty()) fail(ErrorKind::Invalid, "no star touches the chain inside the patch");
  if (found.size() > 1) fail(ErrorKind::Structural, "chain touches more than one star");
  return *found.begin();
}

std::size_t PrimeCensus::exceptions() const {
  std::size_t n = 0;
  for (const auto& r : rows)
    for (const auto& [a, c] : r.angles)
      if (a != r.expected_angle) n += c;
  return n;
}

PrimeCensus prime_census(const Tiling& tl) {
  PrimeCensus out;
  std::map<int, std::size_t> row_of;
  for (const auto& c : prime_catalogue()) {
    row_of[c.id] = out.rows.size();
    out.rows.push_back({c.id, c.angle, 0, 0, {}, {}});
  }
  SearchBudget b;
  b.witness_cap = 0;
  const auto rec = enumerate_trees_with_leaves(tl.graph, kPrimeOrder, kPrimeLeaves, b);
  for (const auto& w : rec.witnesses) {
    ++out.total;
    auto pc = make_prime(tl.graph, InducedSubtree(tl.graph, w));
    pc.class_id = prime_class_of_chain(tl.patch, pc.chain);
    if (pc.class_id == 0) {
      ++out.unknown;
      continue;
    }
    auto& row = out.rows[row_of.at(pc.class_id)];
    ++row.instances;
    try {
      measure_prime(tl, pc);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Invalid) ++row.unmeasured;
      else ++out.structural;
      continue;
    }
    ++row.angles[pc.angle];
    ++row.sides[*pc.side == Side::Left ? 0 : 1];
  }
  return out;
}

GraftCensus grafting_configurations(const Tiling& tl) {
  const auto& g = tl.graph;
  SearchBudget b;
  b.witness_cap = 0;
  const auto rec = enumerate_trees_with_leaves(g, kPrimeOrder, kPrimeLeaves, b);
  std::vector<InducedSubtree> trees;
  std::vector<PrimeCaterpillar> primes;
  for (const auto& w : rec.witnesses) {
    trees.emplace_back(g, w);
    primes.push_back(make_prime(g, trees.back()));
  }
  std::vector<std::vector<int>> by_leaf(g.size());
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (int v : trees[i].leaves()) by_leaf[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));

  auto star_of = [&](const PrimeCaterpillar& pc) -> std::optional<Cyclo10> {
    try {
      return tl.stars.vertices[static_cast<std::size_t>(own_star(tl, pc.chain))].center;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Invalid) throw;
      return std::nullopt;
    }
  };
  auto end_next_to = [&](const PrimeCaterpillar& pc, int j) {
    return g.adjacent(pc.chain.front(), j) ? pc.chain.front() : pc.chain.back();
  };

  GraftCensus out;
  out.primes = trees.size();
  std::map<std::string, GraftClass> by_sig;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const auto& list = by_leaf[j];
    for (std::size_t x = 0; x < list.size(); ++x)
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        const auto& a = trees[static_cast<std::size_t>(list[x])];
        const auto& b2 = trees[static_cast<std::size_t>(list[y])];
        try {
          graft(g, a, b2, static_cast<int>(j));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::Invalid) throw;
          continue;
        }
        const auto& pa = primes[static_cast<std::size_t>(list[x])];
        const auto& pb = primes[static_cast<std::size_t>(list[y])];
        const auto sa = star_of(pa), sb = star_of(pb);
        if (!sa || !sb) {
          ++out.unmeasured;
          continue;
        }
        const std::array<int, 3> local{end_next_to(pa, static_cast<int>(j)), static_cast<int>(j),
                                       end_next_to(pb, static_cast<int>(j))};
        const std::array<Cyclo10, 2> marks{*sa, *sb};
        const auto sig = tile_set_signature(tl.patch, local, marks);
        auto& c = by_sig[sig];
        if (c.instances++ == 0) {
          c.signature = sig;
          c.example = {a.tiles(), b2.tiles()};
          c.junction = static_cast<int>(j);
        }
      }
  }
  for (auto& [sig, c] : by_sig) out.classes.push_back(std::move(c));
  return out;
}

Cyclo10 flank_point(const Tiling& tl, int star, int end_tile) {
  const auto& sg = tl.stars;
  if (sg.edges.empty()) fail(ErrorKind::Invalid, "star-graph has no edges");
  const auto& sv = sg.vertices.at(static_cast<std::size_t>(star));
  const Cyclo10 s = sv.center;
  const Cyclo10 e0 = sg.vertices[sg.edges[0].second].center - sg.vertices[sg.edges[0].first].center;

  std::vector<Cyclo10> axes;  // tip to reflex corner of each star dart
  for (int d : sv.star_tiles) axes.push_back(tl.patch.tile(d).outline()[2] - s);
  std::vector<Cyclo10> rose;
  for (int j = 0; j < 10; ++j) {
    const Cyclo10 v = e0.rotated(j);
    if (std::any_of(axes.begin(), axes.end(), [&](const Cyclo10& q) { return cross_sign(q, v) == 0 && dot_sign(q, v) > 0; }))
      rose.push_back(v);
  }
  if (rose.size() != 5) fail(ErrorKind::Structural, "star-graph edges do not leave the star along its dart axes");

  const Cyclo10 c4 = tl.patch.tile(end_tile).corner_sum();
  int best = -1;
  GoldenInt best_d;
  bool tie = false;
  for (std::size_t j = 0; j < rose.size(); ++j) {
    const GoldenInt d = (4 * (s + rose[j]) - c4).norm2();
    if (best < 0 || d < best_d) {
      best = static_cast<int>(j);
      best_d = d;
      tie = false;
    } else if (d == best_d) {
      tie = true;
    }
  }
  if (tie) fail(ErrorKind::Structural, "end tile is equidistant from two star-graph directions");
  return s + rose[static_cast<std::size_t>(best)];
}

namespace {

// +1 strictly inside the open counter-clockwise wedge from u to w (span k tenths
// of a turn), -1 strictly outside, 0 on a bounding ray.
int wedge_side(const Cyclo10& u, const Cyclo10& w, int k, const Cyclo10& z) {
  auto on_ray = [&](const Cyclo10& r) { return cross_sign(r, z) == 0 && dot_sign(r, z) > 0; };
  if (on_ray(u) || on_ray(w)) return 0;
  bool inside;
  if (k < 5)
    inside = cross_sign(u, z) > 0 && cross_sign(z, w) > 0;
  else if (k == 5)
    inside = cross_sign(u, z) > 0;
  else
    inside = !(cross_sign(w, z) >= 0 && cross_sign(z, u) >= 0);
  return inside ? 1 : -1;
}

}  // namespace

void measure_prime(const Tiling& tl, PrimeCaterpillar& pc) {
  if (pc.chain.size() != kPrimeInternal) fail(ErrorKind::Invalid, "prime chain must have eight tiles");
  pc.star = own_star(tl, pc.chain);
  const Cyclo10 s = tl.stars.vertices[static_cast<std::size_t>(pc.star)].center;
  const Cyclo10 a = flank_point(tl, pc.star, pc.chain.front());
  const Cyclo10 b = flank_point(tl, pc.star, pc.chain.back());
  // a flanking star beyond the patch edge still fixes the angle exactly
  pc.flanks = {tl.stars.find(a), tl.stars.find(b)};
  if (a == b) fail(ErrorKind::Structural, "both chain ends point at the same star");
  const Cyclo10 u = a - s, w = b - s;
  const int k = direction_index(w, u);
  if (k <= 0) fail(ErrorKind::Structural, "flanking edges are not decagon directions apart");
  int inside = 0;
  for (std::size_t i = 1; i + 1 < pc.chain.size(); ++i) {
    const Cyclo10 z = tl.patch.tile(pc.chain[i]).corner_sum() - 4 * s;
    const int side = wedge_side(u, w, k, z);
    if (side == 0) fail(ErrorKind::Structural, "C'' tile centred on a star-graph edge");
    inside += side > 0;
  }
  if (inside == 3) fail(ErrorKind::Structural, "C'' tiles split evenly between the sides");
  if (inside > 3) {
    pc.angle = k;
    pc.side = Side::Right;
    pc.majority = inside;
  } else {
    pc.angle = 10 - k;
    pc.side = Side::Left;
    pc.majority = 6 - inside;
  }
}

int angle_of(const Tiling& tl, PrimeCaterpillar pc) {
  measure_prime(tl, pc);
  return pc.angle;
}

namespace {

std::vector<int> subtract(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Shapes 1 and 2.  Returns nothing if the caterpillar does not split into
// primes joined at single tiles with at most one partial end.
std::optional<CaterpillarChain> split_caterpillar(const P2Graph& g, const InducedSubtree& t) {
  CaterpillarChain c;
  c.tiles = t.tiles();
  const auto path = spine(g, t);
  const int m = static_cast<int>(path.size());
  std::vector<std::pair<int, int>> runs;  // [begin, end) of degree-3 runs
  for (int i = 0; i < m;) {
    if (t.degree(path[i]) != 3) {
      ++i;
      continue;
    }
    int j = i;
    while (j < m && t.degree(path[j]) == 3) ++j;
    if (j - i > kPrimeInternal) return std::nullopt;
    if (j - i == kPrimeInternal) runs.emplace_back(i, j);
    i = j;
  }
  auto prime_of = [&](std::pair<int, int> r) {
    PrimeCaterpillar pc;
    pc.chain.assign(path.begin() + r.first, path.begin() + r.second);
    std::set<int> tiles(pc.chain.begin(), pc.chain.end());
    for (int v : pc.chain)
      for (int w : g.neighbors(v))
        if (t.contains(w)) tiles.insert(w);
    pc.tiles.assign(tiles.begin(), tiles.end());
    return pc;
  };

  if (m <= kPrimeInternal) {
    c.shape = 1;
    if (runs.size() == 1) c.primes.push_back(prime_of(runs[0]));
    return c;
  }
  if (runs.empty()) return std::nullopt;
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    if (runs[i + 1].first != runs[i].second + 1) return std::nullopt;
    c.junctions.push_back(path[static_cast<std::size_t>(runs[i].second)]);
  }
  for (auto r : runs) c.primes.push_back(prime_of(r));
  const bool before = runs.front().first > 0;
  const bool after = runs.back().second < m;
  if (before && after) return std::nullopt;
  if (before || after) {
    std::vector<int> covered;
    for (const auto& pc : c.primes) covered.insert(covered.end(), pc.tiles.begin(), pc.tiles.end());
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    c.partial = subtract(c.tiles, covered);
    const int graft_tile = before ? path[static_cast<std::size_t>(runs.front().first) - 1]
                                  : path[static_cast<std::size_t>(runs.back().second)];
    c.partial.insert(std::lower_bound(c.partial.begin(), c.partial.end(), graft_tile), graft_tile);
  }
  c.shape = 2;
  return c;
}

// The tiles of t reached from `from` without passing through `cut`.
std::vector<int> branch(const P2Graph& g, const InducedSubtree& t, int cut, int from) {
  std::vector<int> out{from}, stack{from};
  std::set<int> seen{cut, from};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (t.contains(w) && seen.insert(w).second) {
        out.push_back(w);
        stack.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CaterpillarChain decompose(const P2Graph& g, const InducedSubtree& t) {
  if (t.leaf_count() != leaf_function(static_cast<std::int64_t>(t.order())))
    fail(ErrorKind::Invalid, "decompose: tree is not fully leafed");
  if (is_caterpillar(g, t))
    if (auto c = split_caterpillar(g, t)) return *c;

  // shape 3: a small appendix hangs off a leaf of a shape 1 or 2 caterpillar
  std::optional<CaterpillarChain> best;
  for (int a : t.tiles()) {
    if (t.degree(a) != 2) continue;
    for (int f : g.neighbors(a)) {
      if (!t.contains(f)) continue;
      auto app = branch(g, t, a, f);
      app.insert(std::lower_bound(app.begin(), app.end(), a), a);
      if (!induces_tree(g, app)) continue;
      const InducedSubtree A(g, app);
      if (A.internal().size() > 2 || A.leaf_count() > 4) continue;
      auto rest_tiles = subtract(t.tiles(), app);
      rest_tiles.insert(std::lower_bound(rest_tiles.begin(), rest_tiles.end(), a), a);
      const InducedSubtree R(g, rest_tiles);
      if (!is_caterpillar(g, R)) continue;
      auto c = split_caterpillar(g, R);
      if (!c) continue;
      if (best && best->appendix.size() <= app.size()) continue;
      c->shape = 3;
      c->tiles = t.tiles();
      c->appendix = app;
      best = std::move(c);
    }
  }
  if (!best) fail(ErrorKind::Structural, "tree fits none of the three fully leafed structures");
  return *best;
}

void analyze_chain(const Tiling& tl, CaterpillarChain& c) {
  c.star_chain.clear();
  for (auto& pc : c.primes) {
    pc.class_id = prime_class_of_chain(tl.patch, pc.chain);
    try {
      measure_prime(tl, pc);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Invalid) throw;
      pc.angle = 0;
      pc.side.reset();
    }
    c.star_chain.push_back(pc.star);
  }
  for (std::size_t i = 0; i + 1 < c.primes.size(); ++i) {
    const auto& x = c.primes[i];
    const auto& y = c.primes[i + 1];
    if (x.star >= 0 && y.star >= 0 && x.star == y.star)
      fail(ErrorKind::Structural, "grafted primes share their star");
    if (x.angle && y.star >= 0 && x.flanks[1] != y.star) fail(ErrorKind::Structural, "graft does not follow a star-graph edge");
    if (y.angle && x.star >= 0 && y.flanks[0] != x.star) fail(ErrorKind::Structural, "graft does not follow a star-graph edge");
  }
  c.analyzed = true;
}

std::vector<Side> side_sequence(const CaterpillarChain& c) {
  std::vector<Side> out;
  for (std::size_t i = 0; i < c.primes.size(); ++i) {
    if (!c.primes[i].side) fail(ErrorKind::Structural, "prime " + std::to_string(i) + " has no measured side");
    out.push_back(*c.primes[i].side);
  }
  return out;
}

bool sides_alternate(std::span<const Side> s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) return false;
  return true;
}

std::string angle_word(const CaterpillarChain& c) {
  std::string w;
  for (const auto& pc : c.primes) w += pc.angle ? static_cast<char>('0' + pc.angle) : '?';
  return w;
}

std::string chain_word(const Tiling& tl, const CaterpillarChain& c, WordAlphabet a) {
  if (a == WordAlphabet::Angles) return angle_word(c);
  std::string w;
  for (const auto& pc : c.primes)
    w += pc.star >= 0 ? color_letter(tl.stars.vertices[static_cast<std::size_t>(pc.star)].color) : '?';
  return w;
}

std::vector<SeaTemplate> parse_sea_catalogue(const std::string& text) {
  std::vector<SeaTemplate> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    const auto w = textio::split(line);
    if (w.empty() || w[0][0] == '#') continue;
    if (w.size() != 2 || w[1].find_first_not_of("468") != std::string::npos)
      fail(ErrorKind::Invalid, "sea catalogue: malformed line '" + line + "'");
    out.push_back({w[0], w[1]});
  }
  return out;
}

const std::vector<SeaTemplate>& sea_catalogue() {
  static const auto catalogue = parse_sea_catalogue(embedded::kSeaCaterpillars);
  return catalogue;
}

std::vector<SeaCaterpillar> detect_sea_caterpillars(std::string_view angles, const std::vector<SeaTemplate>& catalogue) {
  std::vector<SeaCaterpillar> hits;
  for (const auto& t : catalogue) {
    if (t.angles.empty()) continue;
    const std::string rev(t.angles.rbegin(), t.angles.rend());
    for (const std::string_view pat : {std::string_view(t.angles), std::string_view(rev)})
      for (std::size_t pos = angles.find(pat); pos != std::string_view::npos; pos = angles.find(pat, pos + 1))
        hits.push_back({t.name, static_cast<int>(pos), static_cast<int>(pos + pat.size()) - 1});
  }
  std::vector<SeaCaterpillar> out;
  for (const auto& h : hits) {
    const bool inside_longer = std::any_of(hits.begin(), hits.end(), [&](const SeaCaterpillar& o) {
      return o.first <= h.first && h.last <= o.last && (o.last - o.first) > (h.last - h.first);
    });
    if (!inside_longer) out.push_back(h);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return std::tie(x.first, x.last, x.kind) < std::tie(y.first, y.last, y.kind); });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first == y.first && x.last == y.last && x.kind == y.kind; }), out.end());
  // uncovered stretches
  std::vector<char> covered(angles.size(), 0);
  for (const auto& h : out)
    for (int i = h.first; i <= h.last; ++i) covered[static_cast<std::size_t>(i)] = 1;
  std::vector<SeaCaterpillar> residue;
  for (std::size_t i = 0; i < angles.size();) {
    if (covered[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < angles.size() && !covered[j]) ++j;
    residue.push_back({"residue", static_cast<int>(i), static_cast<int>(j) - 1});
    i = j;
  }
  out.insert(out.end(), residue.begin(), residue.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return std::tie(x.first, x.last) < std::tie(y.first, y.last); });
  return out;
}

std::vector<SeaCaterpillar> detect_sea_caterpillars(const CaterpillarChain& c) {
  return detect_sea_caterpillars(angle_word(c));
}

std::string_view pattern_name(PatternKind k) {
  switch (k) {
    case PatternKind::ConsecutiveFourFour: return "angles44";
    case PatternKind::ContainsPc1: return "pc1";
    case PatternKind::Cape2: return "cape2";
    case PatternKind::Cape3: return "cape3";
  }
  return "?";
}

std::vector<PatternViolation> forbidden_patterns(std::string_view angles, std::span<const int> classes) {
  std::vector<PatternViolation> out;
  for (std::size_t i = 0; i + 1 < angles.size(); ++i)
    if (angles[i] == '4' && angles[i + 1] == '4') out.push_back({PatternKind::ConsecutiveFourFour, static_cast<int>(i)});
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == 1) out.push_back({PatternKind::ContainsPc1, static_cast<int>(i)});
  for (const auto& s : detect_sea_caterpillars(angles)) {
    if (s.kind == "cape2") out.push_back({PatternKind::Cape2, s.first});
    if (s.kind == "cape3") out.push_back({PatternKind::Cape3, s.first});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::pair(x.position, static_cast<int>(x.kind)) < std::pair(y.position, static_cast<int>(y.kind));
  });
  return out;
}

std::vector<PatternViolation> forbidden_patterns(const CaterpillarChain& c) {
  std::vector<int> classes;
  for (const auto& pc : c.primes) classes.push_back(pc.class_id);
  return forbidden_patterns(angle_word(c), classes);
}

ChainReport chain_report(const Tiling& tl, const CaterpillarChain& c) {
  ChainReport r;
  r.order = static_cast<int>(c.tiles.size());
  r.shape = c.shape;
  r.tiles = c.tiles;
  for (const auto& pc : c.primes) r.primes.push_back({pc.class_id, pc.angle, pc.side});
  r.colors = chain_word(tl, c, WordAlphabet::Colors);
  r.angles = chain_word(tl, c, WordAlphabet::Angles);
  for (const auto& v : forbidden_patterns(c))
    r.violations.push_back(std::string(pattern_name(v.kind)) + "@" + std::to_string(v.position));
  return r;
}

void write_chain(std::ostream& os, const ChainReport& r) {
  os << "CHAIN v1\n";
  os << "order " << r.order << " shape " << r.shape << '\n';
  os << "tiles";
  for (int v : r.tiles) os << ' ' << v;
  os << '\n';
  for (std::size_t k = 0; k < r.primes.size(); ++k) {
    const auto& p = r.primes[k];
    os << "prime " << k << " class " << p.class_id << " angle ";
    if (p.angle) os << p.angle;
    else os << '-';
    os << " side " << (p.side ? side_letter(*p.side) : '-') << '\n';
  }
  os << "word colors " << (r.colors.empty() ? "-" : r.colors) << '\n';
  os << "word angles " << (r.angles.empty() ? "-" : r.angles) << '\n';
  os << "violations";
  if (r.violations.empty()) os << " none";
  for (const auto& v : r.violations) os << ' ' << v;
  os << '\n';
}

ChainReport read_chain(std::istream& is) {
  constexpr const char* fmt = "CHAIN";
  textio::expect_header(is, "CHAIN v1");
  ChainReport r;
  const auto head = textio::split(textio::next_line(is, fmt));
  if (head.size() != 4 || head[0] != "order" || head[2] != "shape") fail(ErrorKind::Invalid, "CHAIN: expected 'order <n> shape <s>'");
  r.order = static_cast<int>(textio::to_int(head[1], fmt));
  r.shape = static_cast<int>(textio::to_int(head[3], fmt));
  const auto tiles = textio::split(textio::next_line(is, fmt));
  if (tiles.empty() || tiles[0] != "tiles") fail(ErrorKind::Invalid, "CHAIN: expected 'tiles ...'");
  for (std::size_t i = 1; i < tiles.size(); ++i) r.tiles.push_back(static_cast<int>(textio::to_int(tiles[i], fmt)));
  if (static_cast<int>(r.tiles.size()) != r.order) fail(ErrorKind::Invalid, "CHAIN: tile count differs from order");
  for (;;) {
    const auto w = textio::split(textio::next_line(is, fmt));
    if (w.size() == 8 && w[0] == "prime" && w[2] == "class" && w[4] == "angle" && w[6] == "side") {
      if (textio::to_int(w[1], fmt) != static_cast<long long>(r.primes.size())) fail(ErrorKind::Invalid, "CHAIN: prime indices must be consecutive");
      ChainReport::Prime p;
      p.class_id = static_cast<int>(textio::to_int(w[3], fmt));
      p.angle = w[5] == "-" ? 0 : static_cast<int>(textio::to_int(w[5], fmt));
      if (w[7] == "L") p.side = Side::Left;
      else if (w[7] == "R") p.side = Side::Right;
      else if (w[7] != "-") fail(ErrorKind::Invalid, "CHAIN: side must be L, R or -");
      r.primes.push_back(p);
      continue;
    }
    if (w.size() == 3 && w[0] == "word" && w[1] == "colors") {
      r.colors = w[2] == "-" ? "" : w[2];
      break;
    }
    fail(ErrorKind::Invalid, "CHAIN: unexpected line");
  }
  const auto ang = textio::split(textio::next_line(is, fmt));
  if (ang.size() != 3 || ang[0] != "word" || ang[1] != "angles") fail(ErrorKind::Invalid, "CHAIN: expected 'word angles ...'");
  r.angles = ang[2] == "-" ? "" : ang[2];
  const auto vio = textio::split(textio::next_line(is, fmt));
  if (vio.size() < 2 || vio[0] != "violations") fail(ErrorKind::Invalid, "CHAIN: expected 'violations ...'");
  if (!(vio.size() == 2 && vio[1] == "none")) r.violations.assign(vio.begin() + 1, vio.end());
  return r;
}

std::string chain_to_string(const ChainReport& r) {
  std::ostringstream os;
  write_chain(os, r);
  return os.str();
}

ChainReport chain_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_chain(is);
}

}  // namespace p2flis
