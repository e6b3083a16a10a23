#include "p2flis/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <unordered_map>

#include "p2flis/error.hpp"

namespace p2flis {

char kind_letter(TileKind k) { return k == TileKind::Kite ? 'K' : 'D'; }

Cyclo10 axis_length(TileKind k) { return k == TileKind::Kite ? Cyclo10::phi() : Cyclo10::one(); }

Chirality HalfTile::chirality() const {
  return cross_sign(axis_end - tip, side - tip) > 0 ? Chirality::Left : Chirality::Right;
}

GoldenInt HalfTile::twice_area_over_sin36() const {
  const GoldenInt a = p2flis::twice_area_over_sin36(tip, side, axis_end);
  return a.sign() < 0 ? -a : a;
}

std::array<Cyclo10, 4> Tile::outline() const {
  const Cyclo10 phi = Cyclo10::phi();
  return {anchor, anchor + phi * Cyclo10::zeta_pow(rotation - 1),
          anchor + axis_length(kind) * Cyclo10::zeta_pow(rotation),
          anchor + phi * Cyclo10::zeta_pow(rotation + 1)};
}

std::array<HalfTile, 2> Tile::halves() const {
  const auto o = outline();
  return {HalfTile{kind, o[0], o[3], o[2]}, HalfTile{kind, o[0], o[1], o[2]}};
}

// Kite: tip and tail black, sides white.  Dart: sides black, tip and reflex white.
VertexColor Tile::corner_color(int i) const {
  const bool side = (i == 1 || i == 3);
  if (kind == TileKind::Kite) return side ? VertexColor::White : VertexColor::Black;
  return side ? VertexColor::Black : VertexColor::White;
}

Cyclo10 Tile::corner_sum() const {
  const auto o = outline();
  return o[0] + o[1] + o[2] + o[3];
}

std::vector<HalfTile> Patch::all_halves() const {
  std::vector<HalfTile> out;
  out.reserve(2 * tiles.size() + loose.size());
  for (const auto& t : tiles) {
    const auto h = t.halves();
    out.push_back(h[0]);
    out.push_back(h[1]);
  }
  out.insert(out.end(), loose.begin(), loose.end());
  return out;
}

SeedKind parse_seed(std::string_view name) {
  if (name == "kite") return SeedKind::Kite;
  if (name == "dart") return SeedKind::Dart;
  if (name == "sun") return SeedKind::Sun;
  if (name == "star") return SeedKind::Star;
  fail(ErrorKind::Usage, "unknown seed '" + std::string(name) + "' (expected kite, dart, sun or star)");
}

std::string_view seed_name(SeedKind s) {
  switch (s) {
    case SeedKind::Kite: return "kite";
    case SeedKind::Dart: return "dart";
    case SeedKind::Sun: return "sun";
    case SeedKind::Star: return "star";
  }
  return "?";
}

Patch seed_patch(SeedKind s) {
  Patch p;
  auto add = [&](TileKind k, int rot) {
    p.tiles.push_back(Tile{static_cast<int>(p.tiles.size()), k, Cyclo10{}, rot, 0});
  };
  switch (s) {
    case SeedKind::Kite: add(TileKind::Kite, 0); break;
    case SeedKind::Dart: add(TileKind::Dart, 0); break;
    case SeedKind::Sun:
      for (int j = 0; j < 5; ++j) add(TileKind::Kite, 2 * j);
      break;
    case SeedKind::Star:
      for (int j = 0; j < 5; ++j) add(TileKind::Dart, 2 * j);
      break;
  }
  return p;
}

std::vector<HalfTile> substitute(const HalfTile& h) {
  const Cyclo10 phi = Cyclo10::phi();
  const Cyclo10 inv = Cyclo10::phi_inverse();
  const Cyclo10 a = h.tip * phi;
  const Cyclo10 b = h.side * phi;
  const Cyclo10 c = h.axis_end * phi;
  if (h.kind == TileKind::Kite) {
    const Cyclo10 e = a + (c - a) * inv;        // on the axis, phi from the tip
    const Cyclo10 d = a + (b - a) * inv * inv;  // on the long edge, 1 from the tip
    return {HalfTile{TileKind::Dart, a, e, d}, HalfTile{TileKind::Kite, b, d, e},
            HalfTile{TileKind::Kite, b, c, e}};
  }
  const Cyclo10 d = a + (b - a) * inv;  // on the long edge, phi from the tip
  return {HalfTile{TileKind::Kite, a, d, c}, HalfTile{TileKind::Dart, b, c, d}};
}

Patch merge_halves(const std::vector<HalfTile>& halves, int scale_exp) {
  // key: (kind, tip, axis end) -> indices of halves on that axis
  std::map<std::tuple<int, Cyclo10, Cyclo10>, std::vector<std::size_t>> by_axis;
  for (std::size_t i = 0; i < halves.size(); ++i) {
    const auto& h = halves[i];
    by_axis[{static_cast<int>(h.kind), h.tip, h.axis_end}].push_back(i);
  }
  Patch p;
  p.scale_exp = scale_exp;
  for (const auto& [key, idx] : by_axis) {
    const auto& first = halves[idx.front()];
    bool paired = idx.size() == 2 && halves[idx[0]].chirality() != halves[idx[1]].chirality();
    if (!paired) {
      for (auto i : idx) p.loose.push_back(halves[i]);
      continue;
    }
    const int rot = direction_index(first.axis_end - first.tip, axis_length(first.kind));
    if (rot < 0) fail(ErrorKind::Invalid, "half-tile axis is not a prototile axis");
    p.tiles.push_back(Tile{0, first.kind, first.tip, rot, 0});
  }
  std::sort(p.tiles.begin(), p.tiles.end(), [](const Tile& x, const Tile& y) {
    return std::tie(x.anchor, x.rotation, x.kind) < std::tie(y.anchor, y.rotation, y.kind);
  });
  for (std::size_t i = 0; i < p.tiles.size(); ++i) p.tiles[i].id = static_cast<int>(i);
  std::sort(p.loose.begin(), p.loose.end(), [](const HalfTile& x, const HalfTile& y) {
    return std::tie(x.tip, x.axis_end, x.side, x.kind) < std::tie(y.tip, y.axis_end, y.side, y.kind);
  });
  return p;
}

Patch inflate(const Patch& p) {
  std::vector<HalfTile> next;
  const auto halves = p.all_halves();
  next.reserve(3 * halves.size());
  for (const auto& h : halves) {
    const auto parts = substitute(h);
    next.insert(next.end(), parts.begin(), parts.end());
  }
  return merge_halves(next, p.scale_exp + 1);
}

Patch inflate(const Patch& p, int steps) {
  Patch q = p;
  for (int i = 0; i < steps; ++i) q = inflate(q);
  return q;
}

HalfTileCounts count_halves(const Patch& p) {
  HalfTileCounts c;
  for (const auto& t : p.tiles) (t.kind == TileKind::Kite ? c.half_kites : c.half_darts) += 2;
  for (const auto& h : p.loose) (h.kind == TileKind::Kite ? c.half_kites : c.half_darts) += 1;
  return c;
}

GoldenInt twice_area_over_sin36(const Patch& p) {
  GoldenInt total;
  for (const auto& h : p.all_halves()) total += h.twice_area_over_sin36();
  return total;
}

std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::PartialEdge: return "partial-edge";
    case ViolationKind::MatchingRule: return "matching-rule";
    case ViolationKind::BadShape: return "bad-shape";
  }
  return "?";
}

std::size_t ValidityReport::count(ViolationKind k) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; }));
}

namespace {

struct Piece {
  int owner;  // tile id, or -1 - index for loose halves
  std::array<Cyclo10, 3> tri;
};

// Closed-triangle interiors intersect unless some edge line separates them.
bool interiors_overlap(const std::array<Cyclo10, 3>& s, const std::array<Cyclo10, 3>& t) {
  auto separated_by = [](const std::array<Cyclo10, 3>& a, const std::array<Cyclo10, 3>& b) {
    const int orient = cross_sign(a[1] - a[0], a[2] - a[0]);
    for (int i = 0; i < 3; ++i) {
      const Cyclo10& p = a[i];
      const Cyclo10& q = a[(i + 1) % 3];
      bool all_out = true;
      for (const auto& v : b)
        if (cross_sign(q - p, v - p) * orient > 0) {
          all_out = false;
          break;
        }
      if (all_out) return true;
    }
    return false;
  };
  return !separated_by(s, t) && !separated_by(t, s);
}

bool strictly_inside_segment(const Cyclo10& v, const Cyclo10& p, const Cyclo10& q) {
  if (v == p || v == q) return false;
  if (cross_sign(q - p, v - p) != 0) return false;
  return dot_sign(v - p, q - p) > 0 && dot_sign(v - q, p - q) > 0;
}

using Bucket = std::pair<long, long>;
struct BucketHash {
  std::size_t operator()(const Bucket& b) const noexcept {
    return std::hash<long>{}(b.first) * 1000003u ^ std::hash<long>{}(b.second);
  }
};

Bucket bucket_of(const Cyclo10& corner_sum, int corners) {
  // floating positions only select candidate pairs; every decision below is exact
  const auto z = corner_sum.embed() / static_cast<double>(corners);
  return {static_cast<long>(std::floor(z.real() / 3.0)), static_cast<long>(std::floor(z.imag() / 3.0))};
}

}  // namespace

ValidityReport validate_patch(const Patch& p) {
  ValidityReport rep;
  const GoldenInt phi2{1, 1};
  const GoldenInt one{1, 0};

  for (std::size_t i = 0; i < p.tiles.size(); ++i) {
    const auto& t = p.tiles[i];
    if (t.id != static_cast<int>(i) || t.rotation < 0 || t.rotation > 9 || (t.mirror != 0 && t.mirror != 1))
      rep.violations.push_back({ViolationKind::BadShape, t.id, -1, "bad id, rotation or mirror field"});
  }
  for (std::size_t i = 0; i < p.loose.size(); ++i) {
    const auto& h = p.loose[i];
    const GoldenInt axis2 = h.kind == TileKind::Kite ? phi2 : one;
    if ((h.side - h.tip).norm2() != phi2 || (h.axis_end - h.tip).norm2() != axis2 ||
        (h.axis_end - h.side).norm2() != one)
      rep.violations.push_back({ViolationKind::BadShape, -1 - static_cast<int>(i), -1, "loose half-tile has wrong side lengths"});
  }

  std::vector<Piece> pieces;
  std::vector<std::pair<int, std::vector<Cyclo10>>> polys;  // owner, corners
  for (const auto& t : p.tiles) {
    for (const auto& h : t.halves()) pieces.push_back({t.id, h.vertices()});
    const auto o = t.outline();
    polys.push_back({t.id, {o.begin(), o.end()}});
  }
  for (std::size_t i = 0; i < p.loose.size(); ++i) {
    const int owner = -1 - static_cast<int>(i);
    pieces.push_back({owner, p.loose[i].vertices()});
    const auto v = p.loose[i].vertices();
    polys.push_back({owner, {v.begin(), v.end()}});
  }

  std::unordered_map<Bucket, std::vector<std::size_t>, BucketHash> grid;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& tri = pieces[i].tri;
    grid[bucket_of(tri[0] + tri[1] + tri[2], 3)].push_back(i);
  }
  auto for_near = [&](const Bucket& b, auto&& fn) {
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy) {
        auto it = grid.find({b.first + dx, b.second + dy});
        if (it == grid.end()) continue;
        for (auto j : it->second) fn(j);
      }
  };

  // overlap: one violation per overlapping owner pair
  std::map<std::pair<int, int>, bool> reported;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& a = pieces[i];
    for_near(bucket_of(a.tri[0] + a.tri[1] + a.tri[2], 3), [&](std::size_t j) {
      if (j <= i) return;
      const auto& b = pieces[j];
      if (a.owner == b.owner) return;
      const auto key = std::minmax(a.owner, b.owner);
      if (reported.count(key)) return;
      if (interiors_overlap(a.tri, b.tri)) {
        reported[key] = true;
        rep.violations.push_back({ViolationKind::Overlap, key.first, key.second, "tile interiors overlap"});
      }
    });
  }

  // vertices strictly inside a foreign edge
  std::map<std::pair<int, int>, bool> partial;
  for (const auto& [owner, corners] : polys) {
    Cyclo10 sum;
    for (const auto& c : corners) sum += c;
    const auto b = bucket_of(sum, static_cast<int>(corners.size()));
    for (std::size_t e = 0; e < corners.size(); ++e) {
      const Cyclo10& s = corners[e];
      const Cyclo10& t = corners[(e + 1) % corners.size()];
      for_near(b, [&](std::size_t j) {
        const auto& other = pieces[j];
        if (other.owner == owner) return;
        for (const auto& v : other.tri) {
          if (!strictly_inside_segment(v, s, t)) continue;
          const auto key = std::minmax(owner, other.owner);
          if (partial.count(key)) continue;
          partial[key] = true;
          rep.violations.push_back({ViolationKind::PartialEdge, key.first, key.second,
                                    "vertex lies inside a neighbouring edge"});
        }
      });
    }
  }

  // matching rule at shared full edges between whole tiles
  struct EdgeEnd {
    int tile;
    int corner_a;
    int corner_b;
  };
  std::map<std::pair<Cyclo10, Cyclo10>, std::vector<EdgeEnd>> edges;
  for (const auto& t : p.tiles) {
    const auto o = t.outline();
    for (int e = 0; e < 4; ++e) {
      int ca = e, cb = (e + 1) % 4;
      if (o[cb] < o[ca]) std::swap(ca, cb);
      edges[{o[ca], o[cb]}].push_back({t.id, ca, cb});
    }
  }
  for (const auto& [seg, ends] : edges) {
    if (ends.size() > 2) {
      rep.violations.push_back({ViolationKind::Overlap, ends[0].tile, ends[1].tile, "edge shared by more than two tiles"});
      continue;
    }
    if (ends.size() != 2) continue;
    const Tile& x = p.tiles[static_cast<std::size_t>(ends[0].tile)];
    const Tile& y = p.tiles[static_cast<std::size_t>(ends[1].tile)];
    if (x.corner_color(ends[0].corner_a) != y.corner_color(ends[1].corner_a) ||
        x.corner_color(ends[0].corner_b) != y.corner_color(ends[1].corner_b))
      rep.violations.push_back({ViolationKind::MatchingRule, std::min(x.id, y.id), std::max(x.id, y.id),
                                "vertex colours disagree across shared edge"});
  }
  return rep;
}

void require_valid(const Patch& p) {
  const auto rep = validate_patch(p);
  if (rep.ok()) return;
  const auto& v = rep.violations.front();
  fail(ErrorKind::Invalid, "invalid patch: " + std::string(violation_name(v.kind)) + " between tiles " +
                               std::to_string(v.tile_a) + " and " + std::to_string(v.tile_b) + " (" +
                               std::to_string(rep.violations.size()) + " violations)");
}

}  // namespace p2flis
