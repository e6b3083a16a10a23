#include "p2flis/canonical.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace p2flis {

Cyclo10 PlaneIsometry::apply(const Cyclo10& z) const { return (mirror ? z.conj() : z).rotated(rotation); }

PlacedTile PlaneIsometry::apply(const PlacedTile& t) const {
  // both prototiles are symmetric about their axis, so a reflection just negates it
  const int r = mirror ? -t.rotation : t.rotation;
  return {t.kind, apply(t.anchor), ((r + rotation) % 10 + 10) % 10};
}

namespace {

struct Form {
  std::vector<PlacedTile> tiles;
  std::vector<Cyclo10> marks;
  friend auto operator<=>(const Form&, const Form&) = default;
};

}  // namespace

std::string canonical_signature(std::span<const PlacedTile> tiles, std::span<const Cyclo10> marks) {
  std::optional<Form> best;
  for (int m = 0; m < 2; ++m)
    for (int k = 0; k < 10; ++k) {
      const PlaneIsometry iso{k, m == 1};
      Form f;
      for (const auto& t : tiles) f.tiles.push_back(iso.apply(t));
      for (const auto& z : marks) f.marks.push_back(iso.apply(z));
      Cyclo10 origin;
      if (!f.tiles.empty())
        origin = std::min_element(f.tiles.begin(), f.tiles.end(),
                                  [](const auto& a, const auto& b) { return a.anchor < b.anchor; })->anchor;
      else if (!f.marks.empty())
        origin = *std::min_element(f.marks.begin(), f.marks.end());
      for (auto& t : f.tiles) t.anchor -= origin;
      for (auto& z : f.marks) z -= origin;
      std::sort(f.tiles.begin(), f.tiles.end());
      std::sort(f.marks.begin(), f.marks.end());
      if (!best || f < *best) best = std::move(f);
    }
  std::ostringstream os;
  auto point = [&os](const Cyclo10& z) { os << z.c[0] << ',' << z.c[1] << ',' << z.c[2] << ',' << z.c[3] << ';'; };
  for (const auto& t : best->tiles) {
    os << kind_letter(t.kind) << t.rotation << '@';
    point(t.anchor);
  }
  if (!best->marks.empty()) {
    os << '|';
    for (const auto& z : best->marks) point(z);
  }
  return os.str();
}

std::string tile_set_signature(const Patch& p, std::span<const int> ids, std::span<const Cyclo10> marks) {
  std::vector<PlacedTile> ts;
  ts.reserve(ids.size());
  for (int id : ids) ts.push_back(placed(p.tile(id)));
  return canonical_signature(ts, marks);
}

}  // namespace p2flis
