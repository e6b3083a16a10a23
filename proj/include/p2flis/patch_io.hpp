#pragma once

#include <iosfwd>
#include <string>

#include "p2flis/geometry.hpp"

namespace p2flis {

// P2PATCH v1: "scale <s>" then one "tile <id> <K|D> <rot> <mirror> <c0> <c1> <c2> <c3>"
// line per whole tile in ascending id order.  Loose half-tiles are not written.
void write_patch(std::ostream& os, const Patch& p);
Patch read_patch(std::istream& is);

std::string patch_to_string(const Patch& p);
Patch patch_from_string(const std::string& text);

void save_patch(const std::string& path, const Patch& p);
Patch load_patch(const std::string& path);

}  // namespace p2flis
