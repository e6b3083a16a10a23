#include "p2flis/render.hpp"

#include <algorithm>
#include <complex>
#include <set>
#include <sstream>

#include "p2flis/error.hpp"

namespace p2flis {

namespace {

const char* star_fill(StarColor c) {
  switch (c) {
    case StarColor::Red: return "#d62728";
    case StarColor::Green: return "#2ca02c";
    case StarColor::Blue: return "#1f77b4";
  }
  return "#000";
}

}  // namespace

std::string render_svg(const Patch& p, const P2Graph& g, const RenderOptions& opt) {
  if (p.tiles.empty()) fail(ErrorKind::Invalid, "render: empty patch");
  if (g.size() != p.size()) fail(ErrorKind::Invalid, "render: graph does not belong to the patch");
  const double k = opt.pixels_per_unit;
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  for (const auto& t : p.tiles)
    for (const auto& c : t.outline()) {
      const auto z = c.embed();
      x0 = std::min(x0, z.real());
      x1 = std::max(x1, z.real());
      y0 = std::min(y0, -z.imag());
      y1 = std::max(y1, -z.imag());
    }
  const double pad = 1.0;
  std::ostringstream os;
  os.precision(17);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << (x1 - x0 + 2 * pad) * k << "\" height=\""
     << (y1 - y0 + 2 * pad) * k << "\" viewBox=\"" << x0 - pad << ' ' << y0 - pad << ' ' << x1 - x0 + 2 * pad << ' '
     << y1 - y0 + 2 * pad << "\">\n";

  std::set<int> tree(opt.tree.begin(), opt.tree.end());
  auto internal = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v)) d += tree.count(w) ? 1 : 0;
    return d >= 2;
  };
  os << "<g stroke=\"#333\" stroke-width=\"0.04\" stroke-linejoin=\"round\">\n";
  for (const auto& t : p.tiles) {
    std::string fill = t.kind == TileKind::Kite ? "#f4e3b5" : "#c9b3d9";
    if (tree.count(t.id)) fill = internal(t.id) ? "#8c2d04" : "#fd8d3c";
    os << "<polygon data-id=\"" << t.id << "\" fill=\"" << fill << "\" points=\"";
    for (const auto& c : t.outline()) {
      const auto z = c.embed();
      os << z.real() << ',' << -z.imag() << ' ';
    }
    os << "\"/>\n";
  }
  os << "</g>\n";

  if (opt.stars) {
    const auto& sg = *opt.stars;
    os << "<g stroke=\"#000\" stroke-width=\"0.12\">\n";
    for (auto [a, b] : sg.edges) {
      const auto za = sg.vertices[static_cast<std::size_t>(a)].center.embed();
      const auto zb = sg.vertices[static_cast<std::size_t>(b)].center.embed();
      os << "<line x1=\"" << za.real() << "\" y1=\"" << -za.imag() << "\" x2=\"" << zb.real() << "\" y2=\"" << -zb.imag()
         << "\"/>\n";
    }
    os << "</g>\n<g stroke=\"#000\" stroke-width=\"0.05\">\n";
    for (const auto& v : sg.vertices) {
      const auto z = v.center.embed();
      os << "<circle class=\"star-" << color_letter(v.color) << "\" cx=\"" << z.real() << "\" cy=\"" << -z.imag()
         << "\" r=\"0.45\" fill=\"" << star_fill(v.color) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace p2flis
