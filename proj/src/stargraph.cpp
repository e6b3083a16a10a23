#include "p2flis/stargraph.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <sstream>

#include "p2flis/error.hpp"
#include "p2flis/text_io.hpp"

namespace p2flis {

char color_letter(StarColor c) {
  switch (c) {
    case StarColor::Red: return 'R';
    case StarColor::Green: return 'G';
    case StarColor::Blue: return 'B';
  }
  return '?';
}

StarsAndSuns detect_stars_and_suns(const Patch& p, const P2Graph& g) {
  if (g.size() != p.size()) fail(ErrorKind::Invalid, "graph does not belong to the patch");
  std::map<Cyclo10, std::vector<int>> by_tip;
  for (const auto& t : p.tiles) by_tip[t.anchor].push_back(t.id);
  StarsAndSuns out;
  for (const auto& [tip, ids] : by_tip) {
    if (ids.size() != 5) continue;
    const TileKind k = p.tile(ids[0]).kind;
    if (!std::all_of(ids.begin(), ids.end(), [&](int id) { return p.tile(id).kind == k; })) continue;
    VertexFlower f{tip, {}};
    std::copy(ids.begin(), ids.end(), f.tiles.begin());
    std::sort(f.tiles.begin(), f.tiles.end());
    (k == TileKind::Dart ? out.stars : out.suns).push_back(f);
  }
  return out;
}

int StarGraph::find(const Cyclo10& center) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), center,
                                   [](const StarVertex& v, const Cyclo10& c) { return v.center < c; });
  if (it == vertices.end() || it->center != center) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::vector<int> StarGraph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StarGraph build_star_graph(const Patch& p, const std::vector<VertexFlower>& stars) {
  if (stars.empty()) fail(ErrorKind::Invalid, "no stars in the patch");
  StarGraph sg;
  for (const auto& s : stars) {
    for (int id : s.tiles)
      if (id < 0 || id >= static_cast<int>(p.size())) fail(ErrorKind::Invalid, "star tile outside the patch");
    sg.vertices.push_back({s.center, s.tiles, 0, StarColor::Red});
  }
  std::sort(sg.vertices.begin(), sg.vertices.end(), [](const auto& a, const auto& b) { return a.center < b.center; });
  const std::size_t n = sg.vertices.size();
  if (n < 2) return sg;
  bool first = true;
  GoldenInt d0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const GoldenInt d = (sg.vertices[i].center - sg.vertices[j].center).norm2();
      if (first || d < d0) {
        d0 = d;
        first = false;
      }
    }
  sg.edge_norm2 = d0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((sg.vertices[i].center - sg.vertices[j].center).norm2() == d0)
        sg.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return sg;
}

namespace {
template <class Star>
bool touches(const P2Graph& g, const Star& star_tiles, const VertexFlower& sun) {
  for (int d : star_tiles)
    for (int k : sun.tiles)
      if (g.adjacent(d, k)) return true;
  return false;
}
}  // namespace

bool star_touches_sun(const P2Graph& g, const VertexFlower& star, const VertexFlower& sun) {
  return touches(g, star.tiles, sun);
}

bool star_touches_sun(const P2Graph& g, const StarVertex& star, const VertexFlower& sun) {
  return touches(g, star.star_tiles, sun);
}

StarGraph color_star_vertices(StarGraph sg, const std::vector<VertexFlower>& suns, const P2Graph& g) {
  for (auto& v : sg.vertices) {
    v.sun_count = static_cast<int>(
        std::count_if(suns.begin(), suns.end(), [&](const VertexFlower& s) { return star_touches_sun(g, v, s); }));
    if (v.sun_count > 2)
      fail(ErrorKind::Structural, "star at " + v.center.str() + " touches " + std::to_string(v.sun_count) + " suns");
    v.color = static_cast<StarColor>(v.sun_count);
  }
  return sg;
}

std::map<int, int> face_census(const StarGraph& sg, double radius) {
  std::map<int, int> census;
  const int n = static_cast<int>(sg.vertices.size());
  if (sg.edges.empty()) return census;
  // neighbours of every vertex in counter-clockwise order, using exact directions
  const Cyclo10 unit = sg.vertices[sg.edges[0].second].center - sg.vertices[sg.edges[0].first].center;
  std::vector<std::vector<std::pair<int, int>>> ring(static_cast<std::size_t>(n));  // (direction, neighbour)
  for (auto [a, b] : sg.edges) {
    const Cyclo10 v = sg.vertices[b].center - sg.vertices[a].center;
    const int d = direction_index(v, unit);
    if (d < 0) fail(ErrorKind::Structural, "star-graph edge not parallel to a decagon direction");
    ring[a].emplace_back(d, b);
    ring[b].emplace_back((d + 5) % 10, a);
  }
  for (auto& r : ring) std::sort(r.begin(), r.end());

  std::set<std::pair<int, int>> used;
  for (int a = 0; a < n; ++a)
    for (auto [da, b] : ring[a]) {
      if (used.count({a, b})) continue;
      std::vector<int> face;
      int u = a, v = b;
      bool ok = true;
      while (!used.count({u, v})) {
        used.insert({u, v});
        face.push_back(u);
        // at v, the neighbour just clockwise of u keeps the face on the left
        const auto& rv = ring[v];
        const auto it = std::find_if(rv.begin(), rv.end(), [&](const auto& e) { return e.second == u; });
        const std::size_t idx = static_cast<std::size_t>(it - rv.begin());
        const int w = rv[(idx + rv.size() - 1) % rv.size()].second;
        u = v;
        v = w;
        if (face.size() > sg.vertices.size()) {
          ok = false;
          break;
        }
      }
      if (!ok || face.size() < 3) continue;
      GoldenInt area;
      for (std::size_t i = 0; i < face.size(); ++i)
        area += twice_area_over_sin36(Cyclo10{}, sg.vertices[face[i]].center,
                                      sg.vertices[face[(i + 1) % face.size()]].center);
      if (area.sign() <= 0) continue;  // the unbounded face
      const bool inside = std::all_of(face.begin(), face.end(), [&](int x) {
        return std::abs(sg.vertices[x].center.embed()) <= radius;
      });
      if (inside) ++census[static_cast<int>(face.size())];
    }
  return census;
}

StarGraph star_graph_of(const Patch& p, const P2Graph& g) {
  const auto ss = detect_stars_and_suns(p, g);
  return color_star_vertices(build_star_graph(p, ss.stars), ss.suns, g);
}

void write_star_graph(std::ostream& os, const StarGraph& sg) {
  os << "STARGRAPH v1\n";
  for (std::size_t i = 0; i < sg.vertices.size(); ++i)
    os << "vertex " << i << ' ' << sg.vertices[i].center.str() << ' ' << color_letter(sg.vertices[i].color) << '\n';
  for (auto [a, b] : sg.edges) os << "edge " << a << ' ' << b << '\n';
}

StarGraph read_star_graph(std::istream& is) {
  constexpr const char* fmt = "STARGRAPH";
  textio::expect_header(is, "STARGRAPH v1");
  StarGraph sg;
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto w = textio::split(line);
    if (w.size() == 7 && w[0] == "vertex") {
      if (!sg.edges.empty()) fail(ErrorKind::Invalid, "STARGRAPH: vertex after edges");
      if (textio::to_int(w[1], fmt) != static_cast<std::int64_t>(sg.vertices.size()))
        fail(ErrorKind::Invalid, "STARGRAPH: vertex ids must be dense and ascending");
      StarVertex v;
      for (int k = 0; k < 4; ++k) v.center.c[k] = textio::to_int(w[2 + k], fmt);
      if (w[6] == "R") v.color = StarColor::Red;
      else if (w[6] == "G") v.color = StarColor::Green;
      else if (w[6] == "B") v.color = StarColor::Blue;
      else fail(ErrorKind::Invalid, "STARGRAPH: colour must be R, G or B");
      v.sun_count = static_cast<int>(v.color);
      v.star_tiles.fill(-1);
      sg.vertices.push_back(v);
    } else if (w.size() == 3 && w[0] == "edge") {
      const int a = static_cast<int>(textio::to_int(w[1], fmt));
      const int b = static_cast<int>(textio::to_int(w[2], fmt));
      if (a < 0 || b <= a || b >= static_cast<int>(sg.vertices.size()))
        fail(ErrorKind::Invalid, "STARGRAPH: bad edge '" + line + "'");
      sg.edges.emplace_back(a, b);
    } else {
      fail(ErrorKind::Invalid, "STARGRAPH: malformed line '" + line + "'");
    }
  }
  if (!sg.edges.empty()) {
    const auto [a, b] = sg.edges.front();
    sg.edge_norm2 = (sg.vertices[a].center - sg.vertices[b].center).norm2();
  }
  return sg;
}

std::string star_graph_to_string(const StarGraph& sg) {
  std::ostringstream os;
  write_star_graph(os, sg);
  return os.str();
}

StarGraph star_graph_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_star_graph(is);
}

}  // namespace p2flis
