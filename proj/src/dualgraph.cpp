#include "p2flis/dualgraph.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "p2flis/error.hpp"
#include "p2flis/text_io.hpp"

namespace p2flis {

P2Graph::P2Graph(std::vector<std::vector<int>> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) {
    auto& a = adjacency[static_cast<std::size_t>(v)];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) fail(ErrorKind::Invalid, "duplicate edge in adjacency");
    offsets_[static_cast<std::size_t>(v) + 1] = offsets_[static_cast<std::size_t>(v)] + static_cast<int>(a.size());
    for (int w : a) {
      if (w < 0 || w >= n || w == v) fail(ErrorKind::Invalid, "adjacency entry out of range or a self-loop");
      targets_.push_back(w);
    }
  }
  for (int v = 0; v < n; ++v)
    for (int w : neighbors(v))
      if (!adjacent(w, v)) fail(ErrorKind::Invalid, "adjacency is not symmetric");
}

bool P2Graph::adjacent(int u, int v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> P2Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < static_cast<int>(size()); ++v)
    for (int w : neighbors(v))
      if (v < w) out.emplace_back(v, w);
  return out;
}

P2Graph build_dual(const Patch& p) {
  require_valid(p);
  std::map<std::pair<Cyclo10, Cyclo10>, std::vector<int>> sides;
  for (const auto& t : p.tiles) {
    const auto o = t.outline();
    for (int e = 0; e < 4; ++e) sides[std::minmax(o[e], o[(e + 1) % 4])].push_back(t.id);
  }
  std::vector<std::vector<int>> adj(p.tiles.size());
  for (const auto& [seg, owners] : sides) {
    if (owners.size() != 2) continue;
    adj[static_cast<std::size_t>(owners[0])].push_back(owners[1]);
    adj[static_cast<std::size_t>(owners[1])].push_back(owners[0]);
  }
  return P2Graph(std::move(adj));
}

std::vector<int> interior_tiles(const P2Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(g.size()); ++v)
    if (g.interior(v)) out.push_back(v);
  return out;
}

bool has_induced_claw4(const P2Graph& g) {
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    const auto nb = g.neighbors(v);
    if (nb.size() < 4) continue;
    const std::size_t k = nb.size();
    // choose 4 of k (k <= a handful in planar duals)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        for (std::size_t c = b + 1; c < k; ++c)
          for (std::size_t d = c + 1; d < k; ++d) {
            const int q[4] = {nb[a], nb[b], nb[c], nb[d]};
            bool independent = true;
            for (int i = 0; i < 4 && independent; ++i)
              for (int j = i + 1; j < 4; ++j)
                if (g.adjacent(q[i], q[j])) {
                  independent = false;
                  break;
                }
            if (independent) return true;
          }
  }
  return false;
}

void write_graph(std::ostream& os, const P2Graph& g) {
  os << "P2GRAPH v1\n";
  for (const auto& [a, b] : g.edges()) os << "edge " << a << ' ' << b << '\n';
  for (int v : interior_tiles(g)) os << "interior " << v << '\n';
}

P2Graph read_graph(std::istream& is) {
  constexpr const char* fmt = "P2GRAPH";
  textio::expect_header(is, "P2GRAPH v1");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> interior;
  int n = 0;
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto w = textio::split(line);
    if (w.size() == 3 && w[0] == "edge") {
      const int a = static_cast<int>(textio::to_int(w[1], fmt));
      const int b = static_cast<int>(textio::to_int(w[2], fmt));
      if (a < 0 || b <= a) fail(ErrorKind::Invalid, "P2GRAPH: edge ids must satisfy 0 <= a < b");
      edges.emplace_back(a, b);
      n = std::max(n, b + 1);
    } else if (w.size() == 2 && w[0] == "interior") {
      const int v = static_cast<int>(textio::to_int(w[1], fmt));
      if (v < 0) fail(ErrorKind::Invalid, "P2GRAPH: negative id");
      interior.push_back(v);
      n = std::max(n, v + 1);
    } else {
      fail(ErrorKind::Invalid, "P2GRAPH: malformed line '" + line + "'");
    }
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  P2Graph g(std::move(adj));
  for (int v : interior)
    if (!g.interior(v)) fail(ErrorKind::Invalid, "P2GRAPH: interior flag on a tile without four neighbours");
  return g;
}

std::string graph_to_string(const P2Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

P2Graph graph_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

}  // namespace p2flis
