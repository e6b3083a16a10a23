// p2flis command-line tool.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "p2flis/caterpillar.hpp"
#include "p2flis/error.hpp"
#include "p2flis/flis.hpp"
#include "p2flis/inflation_lab.hpp"
#include "p2flis/leaf_function.hpp"
#include "p2flis/patch_io.hpp"
#include "p2flis/render.hpp"
#include "p2flis/search.hpp"
#include "p2flis/text_io.hpp"

using namespace p2flis;

namespace {

struct Globals {
  unsigned threads = 1;
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") std::cout << text;
  else textio::dump(out_path, text);
}

std::vector<int> parse_levels(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(static_cast<int>(textio::to_int(item, "--levels")));
  if (out.empty()) fail(ErrorKind::Usage, "--levels needs at least one level");
  return out;
}

/// Tiles from a FLIS file (witness `index`) or a CHAIN file.
std::vector<int> load_tiles(const std::string& path, std::size_t index) {
  const auto text = textio::slurp(path);
  if (text.rfind("CHAIN v1", 0) == 0) return chain_from_string(text).tiles;
  const auto rec = flis_from_string(text);
  if (index >= rec.witnesses.size()) fail(ErrorKind::Invalid, path + ": no witness " + std::to_string(index));
  return rec.witnesses[index];
}

CaterpillarChain analysed_chain(const Tiling& tl, const std::vector<int>& tiles) {
  if (!induces_tree(tl.graph, tiles)) fail(ErrorKind::Invalid, "tiles do not induce a tree in the patch");
  auto c = decompose(tl.graph, InducedSubtree(tl.graph, tiles));
  analyze_chain(tl, c);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully leafed induced subtrees of Penrose P2 tilings"};
  app.require_subcommand(1);
  Globals glob;
  app.add_option("--threads", glob.threads, "Worker threads for searches")->check(CLI::PositiveNumber);

  std::function<void()> action;

  // generate
  auto* gen = app.add_subcommand("generate", "Build a patch by repeated inflation of a seed");
  std::string seed = "sun", out;
  int inflations = 0;
  gen->add_option("--seed", seed, "sun, star, kite or dart")->check(CLI::IsMember({"sun", "star", "kite", "dart"}));
  gen->add_option("--inflations", inflations, "Inflation steps")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("-o,--output", out, "Patch file (default stdout)");
  gen->callback([&] {
    action = [&] {
      const auto p = inflate(seed_patch(seed), inflations);
      require_valid(p);
      emit(out, patch_to_string(p));
    };
  });

  // dual
  auto* dual = app.add_subcommand("dual", "Dual graph of a patch");
  std::string patch_path;
  dual->add_option("patch", patch_path, "Patch file")->required();
  dual->add_option("-o,--output", out, "Graph file (default stdout)");
  dual->callback([&] {
    action = [&] {
      const auto g = build_dual(load_patch(patch_path));
      emit(out, graph_to_string(g));
      std::cerr << g.size() << " vertices, " << g.edges().size() << " edges\n";
    };
  });

  // search
  auto* search = app.add_subcommand("search", "Maximum leaves over induced subtrees of one order");
  int order = 0;
  SearchBudget budget;
  search->add_option("patch", patch_path, "Patch file")->required();
  search->add_option("--order", order, "Tree order n")->required()->check(CLI::NonNegativeNumber);
  search->add_option("--node-limit", budget.node_limit, "Node budget (0: none)");
  search->add_option("--time-limit", budget.time_limit_s, "Seconds (0: none)");
  search->add_option("--witness-cap", budget.witness_cap, "Witnesses kept (0: all)");
  search->add_option("-o,--output", out, "FLIS file (default stdout)");
  search->callback([&] {
    action = [&] {
      budget.threads = glob.threads;
      const auto g = build_dual(load_patch(patch_path));
      const auto rec = search_max_leaves(g, order, budget);
      emit(out, flis_to_string(rec));
      if (rec.partial) fail(ErrorKind::Budget, "search budget exhausted; result is partial");
    };
  });

  // leaffn
  auto* leaffn = app.add_subcommand("leaffn", "Table of the leaf function");
  std::int64_t max_n = 20;
  leaffn->add_option("--max", max_n, "Largest order")->check(CLI::NonNegativeNumber);
  leaffn->callback([&] {
    action = [&] {
      std::ostringstream os;
      for (std::int64_t n = 0; n <= max_n; ++n)
        os << "L(" << n << ")=" << leaf_function(n) << " bound=" << leaf_function_upper_line(n)
           << " saturated=" << (is_saturated(n) ? 1 : 0) << '\n';
      std::cout << os.str();
    };
  });

  // verify-leaffn
  auto* verify = app.add_subcommand("verify-leaffn", "Compare searched maxima on several patch levels with the formula");
  std::string levels = "7,8";
  int min_n = 2;
  verify->add_option("--max", max_n, "Largest order")->required();
  verify->add_option("--min", min_n, "Smallest order");
  verify->add_option("--levels", levels, "Comma-separated inflation levels, coarse to fine");
  verify->add_option("--seed", seed, "Seed of the patches")->check(CLI::IsMember({"sun", "star", "kite", "dart"}));
  verify->add_option("--node-limit", budget.node_limit, "Node budget per search (0: none)");
  verify->add_option("--time-limit", budget.time_limit_s, "Seconds per search (0: none)");
  verify->callback([&] {
    action = [&] {
      budget.threads = glob.threads;
      budget.witness_cap = 1;
      std::vector<P2Graph> graphs;
      for (int k : parse_levels(levels)) graphs.push_back(build_dual(inflate(seed_patch(seed), k)));
      bool mismatch = false, partial = false;
      for (int n = min_n; n <= max_n; ++n) {
        const auto rec = search_across_levels(graphs, n, budget);
        const auto f = leaf_function(n);
        const bool ok = !rec.partial && rec.stable && rec.max_leaves == f;
        std::cout << "n=" << n << " search=" << rec.max_leaves << " formula=" << f << " stable=" << rec.stable
                  << (rec.partial ? " partial" : "") << (ok ? " ok" : " MISMATCH") << '\n';
        mismatch |= !rec.partial && !ok;
        partial |= rec.partial;
      }
      if (mismatch) fail(ErrorKind::Structural, "searched maxima disagree with the formula");
      if (partial) fail(ErrorKind::Budget, "some searches ran out of budget");
    };
  });

  // stars
  auto* stars = app.add_subcommand("stars", "Stars, suns and the coloured star-graph");
  std::string svg;
  double radius = 1e9;
  stars->add_option("patch", patch_path, "Patch file")->required();
  stars->add_option("-o,--output", out, "STARGRAPH file");
  stars->add_option("--svg", svg, "SVG overlay");
  stars->add_option("--radius", radius, "Face census radius (stored units)");
  stars->callback([&] {
    action = [&] {
      const auto p = load_patch(patch_path);
      const auto g = build_dual(p);
      const auto ss = detect_stars_and_suns(p, g);
      const auto sg = color_star_vertices(build_star_graph(p, ss.stars), ss.suns, g);
      std::array<int, 3> hist{};
      for (const auto& v : sg.vertices) ++hist[static_cast<std::size_t>(v.color)];
      std::cout << "stars " << ss.stars.size() << " suns " << ss.suns.size() << " edges " << sg.edges.size() << '\n'
                << "colors R " << hist[0] << " G " << hist[1] << " B " << hist[2] << '\n';
      for (auto [size, count] : face_census(sg, radius)) std::cout << "faces " << size << ' ' << count << '\n';
      if (!out.empty()) textio::dump(out, star_graph_to_string(sg));
      if (!svg.empty()) {
        RenderOptions ro;
        ro.stars = &sg;
        textio::dump(svg, render_svg(p, g, ro));
      }
    };
  });

  // classify
  auto* classify = app.add_subcommand("classify", "Prime caterpillar census of a patch");
  classify->add_option("patch", patch_path, "Patch file")->required();
  classify->callback([&] {
    action = [&] {
      const auto tl = make_tiling(load_patch(patch_path));
      const auto c = prime_census(tl);
      std::cout << "primes " << c.total << " unknown " << c.unknown << " structural " << c.structural << '\n';
      for (const auto& r : c.rows) {
        std::cout << "class " << r.class_id << " expected " << r.expected_angle << " instances " << r.instances
                  << " unmeasured " << r.unmeasured << " angles";
        for (auto [a, n] : r.angles) std::cout << ' ' << a << ':' << n;
        std::cout << " sides L:" << r.sides[0] << " R:" << r.sides[1] << '\n';
      }
      std::cout << "exceptions " << c.exceptions() << '\n';
      if (c.unknown || c.structural || c.exceptions())
        fail(ErrorKind::Structural, "census found instances outside the expected classes or angles");
    };
  });

  // chain
  auto* chain = app.add_subcommand("chain", "Decompose a fully leafed tree and report its words");
  std::string witness;
  std::size_t index = 0;
  chain->add_option("--witness", witness, "FLIS or CHAIN file")->required();
  chain->add_option("--index", index, "Witness number in a FLIS file");
  chain->add_option("--patch", patch_path, "Patch file")->required();
  chain->add_option("-o,--output", out, "CHAIN file (default stdout)");
  chain->callback([&] {
    action = [&] {
      const auto tl = make_tiling(load_patch(patch_path));
      const auto c = analysed_chain(tl, load_tiles(witness, index));
      emit(out, chain_to_string(chain_report(tl, c)));
      if (c.primes.size() > 1 && !sides_alternate(side_sequence(c)))
        fail(ErrorKind::Structural, "grafted primes on the same side");
    };
  });

  // extend
  auto* extend = app.add_subcommand("extend", "Extend a saturated chain prime by prime");
  std::string chain_path;
  int target = 3, grow = 0;
  ExtendBudget eb;
  extend->add_option("--chain", chain_path, "CHAIN file of the seed")->required();
  extend->add_option("--patch", patch_path, "Patch file the chain lives in")->required();
  extend->add_option("--target", target, "Primes to add on each side")->check(CLI::NonNegativeNumber);
  extend->add_option("--grow", grow, "Inflate the patch this many times and re-find the seed's angle word near it");
  extend->add_option("--radius", radius, "With --grow: search radius around the old chain (stored units)");
  extend->add_option("--node-limit", eb.node_limit, "Node budget (0: none)");
  extend->add_option("--time-limit", eb.time_limit_s, "Seconds (0: none)");
  extend->add_option("-o,--output", out, "EXTEND file (default stdout)");
  extend->callback([&] {
    action = [&] {
      auto tl = make_tiling(load_patch(patch_path));
      auto seed_chain = analysed_chain(tl, load_tiles(chain_path, 0));
      std::vector<char> allowed;
      if (grow > 0) {
        auto gc = grow_context(tl, seed_chain, grow);
        tl = std::move(gc.tiling);
        allowed = region_mask(tl, gc.region, radius);
        const auto idx = index_primes(tl, allowed);
        auto found = find_chain(tl, idx, angle_word(seed_chain), eb);
        if (!found) fail(ErrorKind::Structural, "seed angle word not found near the grown region");
        seed_chain = std::move(*found);
      }
      const auto idx = index_primes(tl, allowed);
      ExtendOptions eo;
      eo.target = target;
      const auto rep = extend_chain(tl, idx, seed_chain, eo, eb);
      if (rep.rejected) std::cerr << "seed rejected: " << rep.reason << '\n';
      emit(out, extend_to_string({chain_path, rep.left_max, rep.right_max, rep.target, rep.met, chain_report(tl, rep.best)}));
      if (rep.partial) fail(ErrorKind::Budget, "extension budget exhausted; report is partial");
    };
  });

  // render
  auto* render = app.add_subcommand("render", "Draw a patch as SVG");
  std::string tree_path;
  bool with_stars = false;
  render->add_option("patch", patch_path, "Patch file")->required();
  render->add_option("--tree", tree_path, "FLIS or CHAIN file to highlight");
  render->add_flag("--stars", with_stars, "Overlay the coloured star-graph");
  render->add_option("--svg", svg, "Output SVG")->required();
  render->callback([&] {
    action = [&] {
      const auto p = load_patch(patch_path);
      const auto g = build_dual(p);
      RenderOptions ro;
      if (!tree_path.empty()) ro.tree = load_tiles(tree_path, 0);
      StarGraph sg;
      if (with_stars) {
        sg = star_graph_of(p, g);
        ro.stars = &sg;
      }
      textio::dump(svg, render_svg(p, g, ro));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    action();
  } catch (const Error& e) {
    std::cerr << "p2flis: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "p2flis: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
