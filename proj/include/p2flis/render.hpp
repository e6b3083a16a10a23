#pragma once

// Standalone SVG 1.1 pictures of patches, subtrees and star-graphs.

#include <string>
#include <vector>

#include "p2flis/stargraph.hpp"

namespace p2flis {

struct RenderOptions {
  std::vector<int> tree;            // tiles to highlight; internal ones darker than leaves
  const StarGraph* stars = nullptr;  // overlay with vertex colours when set
  double pixels_per_unit = 12.0;
};

/// Floats are used for drawing only.
std::string render_svg(const Patch& p, const P2Graph& g, const RenderOptions& opt = {});

}  // namespace p2flis
