#include "p2flis/patch_io.hpp"

#include <ostream>
#include <sstream>

#include "p2flis/text_io.hpp"

namespace p2flis {

void write_patch(std::ostream& os, const Patch& p) {
  os << "P2PATCH v1\n";
  os << "scale " << p.scale_exp << '\n';
  for (const auto& t : p.tiles) {
    os << "tile " << t.id << ' ' << kind_letter(t.kind) << ' ' << t.rotation << ' ' << t.mirror << ' '
       << t.anchor.str() << '\n';
  }
}

Patch read_patch(std::istream& is) {
  constexpr const char* fmt = "P2PATCH";
  textio::expect_header(is, "P2PATCH v1");
  Patch p;
  const auto scale = textio::split(textio::next_line(is, fmt));
  if (scale.size() != 2 || scale[0] != "scale") fail(ErrorKind::Invalid, "P2PATCH: expected 'scale <s>'");
  p.scale_exp = static_cast<int>(textio::to_int(scale[1], fmt));
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto w = textio::split(line);
    if (w.size() != 9 || w[0] != "tile" || (w[2] != "K" && w[2] != "D"))
      fail(ErrorKind::Invalid, "P2PATCH: malformed tile line '" + line + "'");
    Tile t;
    t.id = static_cast<int>(textio::to_int(w[1], fmt));
    if (t.id != static_cast<int>(p.tiles.size())) fail(ErrorKind::Invalid, "P2PATCH: tile ids must be dense and ascending");
    t.kind = w[2] == "K" ? TileKind::Kite : TileKind::Dart;
    t.rotation = static_cast<int>(textio::to_int(w[3], fmt));
    t.mirror = static_cast<int>(textio::to_int(w[4], fmt));
    if (t.rotation < 0 || t.rotation > 9 || (t.mirror != 0 && t.mirror != 1))
      fail(ErrorKind::Invalid, "P2PATCH: rotation must be 0..9 and mirror 0 or 1");
    for (int k = 0; k < 4; ++k) t.anchor.c[k] = textio::to_int(w[5 + k], fmt);
    p.tiles.push_back(t);
  }
  return p;
}

std::string patch_to_string(const Patch& p) {
  std::ostringstream os;
  write_patch(os, p);
  return os.str();
}

Patch patch_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_patch(is);
}

void save_patch(const std::string& path, const Patch& p) { textio::dump(path, patch_to_string(p)); }

Patch load_patch(const std::string& path) { return patch_from_string(textio::slurp(path)); }

}  // namespace p2flis
