#include "p2flis/inflation_lab.hpp"

#include <algorithm>
#include <chrono>
#include <complex>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "p2flis/error.hpp"
#include "p2flis/search.hpp"
#include "p2flis/text_io.hpp"

namespace p2flis {

namespace {

bool inside_triangle(const std::array<Cyclo10, 3>& v, const Cyclo10& z) {
  const int orient = cross_sign(v[1] - v[0], v[2] - v[0]);
  for (int i = 0; i < 3; ++i)
    if (cross_sign(v[(i + 1) % 3] - v[i], z - v[i]) * orient < 0) return false;
  return true;
}

Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

}  // namespace

GrownContext grow_context(const Tiling& tl, const CaterpillarChain& c, int steps) {
  if (steps < 1) fail(ErrorKind::Invalid, "grow_context: steps must be at least 1");
  GrownContext gc;
  gc.steps = steps;
  gc.scale = phi_pow(steps);
  gc.tiling = make_tiling(inflate(tl.patch, steps));

  // old halves scaled to four times new coordinates, so centroids stay exact
  std::vector<std::array<Cyclo10, 3>> tris;
  std::complex<double> lo{1e300, 1e300}, hi{-1e300, -1e300};
  for (int id : c.tiles)
    for (const auto& h : tl.patch.tile(id).halves()) {
      std::array<Cyclo10, 3> t;
      for (int k = 0; k < 3; ++k) {
        t[k] = 4 * gc.map(h.vertices()[k]);
        const auto z = t[k].embed();
        lo = {std::min(lo.real(), z.real()), std::min(lo.imag(), z.imag())};
        hi = {std::max(hi.real(), z.real()), std::max(hi.imag(), z.imag())};
      }
      tris.push_back(t);
    }
  for (const auto& t : gc.tiling.patch.tiles) {
    const Cyclo10 z = t.corner_sum();
    const auto f = z.embed();
    if (f.real() < lo.real() - 1 || f.real() > hi.real() + 1 || f.imag() < lo.imag() - 1 || f.imag() > hi.imag() + 1)
      continue;
    if (std::any_of(tris.begin(), tris.end(), [&](const auto& tri) { return inside_triangle(tri, z); }))
      gc.region.push_back(t.id);
  }
  for (int s : c.star_chain)
    if (s >= 0) gc.star_chain.push_back(gc.map(tl.stars.vertices[static_cast<std::size_t>(s)].center));
  return gc;
}

std::vector<char> region_mask(const Tiling& tl, std::span<const int> region, double margin) {
  if (region.empty()) fail(ErrorKind::Invalid, "region_mask: empty region");
  auto centroid = [&](int id) { return tl.patch.tile(id).corner_sum().embed() / 4.0; };
  std::complex<double> c{};
  for (int id : region) c += centroid(id);
  c /= static_cast<double>(region.size());
  double r = 0;
  for (int id : region) r = std::max(r, std::abs(centroid(id) - c));
  std::vector<char> mask(tl.patch.size(), 0);
  for (const auto& t : tl.patch.tiles) mask[static_cast<std::size_t>(t.id)] = std::abs(centroid(t.id) - c) <= r + margin;
  return mask;
}

PrimeIndex index_primes(const Tiling& tl, std::span<const char> allowed) {
  const auto& g = tl.graph;
  PrimeIndex idx;
  idx.allowed.assign(allowed.begin(), allowed.end());
  if (idx.allowed.empty()) idx.allowed.assign(g.size(), 1);
  if (idx.allowed.size() != g.size()) fail(ErrorKind::Invalid, "index_primes: mask size differs from the patch");
  idx.by_end.resize(g.size());

  SearchBudget b;
  b.witness_cap = 0;
  const auto rec = enumerate_trees_with_leaves(g, kPrimeOrder, kPrimeLeaves, b, idx.allowed);
  std::map<std::vector<int>, int> seen;
  for (const auto& w : rec.witnesses) {
    auto pc = make_prime(g, InducedSubtree(g, w));
    if (seen.count(pc.chain)) continue;
    seen.emplace(pc.chain, -1);
    try {
      measure_prime(tl, pc);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Invalid) throw;
      continue;
    }
    const int id = static_cast<int>(idx.entries.size());
    idx.entries.push_back({pc.chain, prime_class_of_chain(tl.patch, pc.chain), pc.angle, *pc.side});
    idx.by_end[static_cast<std::size_t>(pc.chain.front())].emplace_back(id, false);
    idx.by_end[static_cast<std::size_t>(pc.chain.back())].emplace_back(id, true);
  }
  return idx;
}

std::optional<std::vector<int>> assemble_caterpillar(const P2Graph& g, std::span<const std::vector<int>> chains,
                                                     std::span<const int> junctions, std::span<const char> allowed) {
  if (chains.empty() || junctions.size() + 1 != chains.size())
    fail(ErrorKind::Invalid, "assemble_caterpillar: need one junction between each pair of chains");
  std::vector<int> path;
  std::vector<char> is_chain;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (i) {
      path.push_back(junctions[i - 1]);
      is_chain.push_back(0);
    }
    for (int v : chains[i]) {
      path.push_back(v);
      is_chain.push_back(1);
    }
  }
  std::vector<char> on_path(g.size(), 0);
  for (int v : path) {
    if (on_path[static_cast<std::size_t>(v)]) return std::nullopt;
    on_path[static_cast<std::size_t>(v)] = 1;
  }
  // the derived graph must be this exact induced path
  for (std::size_t i = 0; i < path.size(); ++i) {
    int d = 0;
    for (int w : g.neighbors(path[i])) d += on_path[static_cast<std::size_t>(w)];
    const int expect = (i > 0) + (i + 1 < path.size());
    if (d != expect) return std::nullopt;
    if (i + 1 < path.size() && !g.adjacent(path[i], path[i + 1])) return std::nullopt;
  }

  // each chain tile needs 3 - (path degree) leaves touching nothing else
  struct Need {
    int need;
    std::vector<int> options;
  };
  std::vector<Need> needs;
  std::vector<int> owner(g.size(), -1);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!is_chain[i]) continue;
    const int pd = (i > 0) + (i + 1 < path.size());
    Need n{3 - pd, {}};
    for (int w : g.neighbors(path[i])) {
      if (on_path[static_cast<std::size_t>(w)]) continue;
      if (!allowed.empty() && !allowed[static_cast<std::size_t>(w)]) continue;
      int touch = 0;
      for (int x : g.neighbors(w)) touch += on_path[static_cast<std::size_t>(x)];
      if (touch == 1) {
        n.options.push_back(w);
        owner[static_cast<std::size_t>(w)] = static_cast<int>(needs.size());
      }
    }
    if (static_cast<int>(n.options.size()) < n.need) return std::nullopt;
    needs.push_back(std::move(n));
  }

  // independent groups: tiles whose options are adjacent must be solved together
  const int m = static_cast<int>(needs.size());
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  int ncomp = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = ncomp;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int w : needs[static_cast<std::size_t>(a)].options)
        for (int x : g.neighbors(w)) {
          const int b = owner[static_cast<std::size_t>(x)];
          if (b >= 0 && comp[static_cast<std::size_t>(b)] < 0) {
            comp[static_cast<std::size_t>(b)] = ncomp;
            stack.push_back(b);
          }
        }
    }
    ++ncomp;
  }

  std::vector<char> chosen(g.size(), 0);
  std::vector<int> leaves;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> members;
    for (int i = 0; i < m; ++i)
      if (comp[static_cast<std::size_t>(i)] == c) members.push_back(i);
    std::vector<int> picked;
    std::function<bool(std::size_t, std::size_t, int)> solve = [&](std::size_t mi, std::size_t from, int left) -> bool {
      if (mi == members.size()) return true;
      const auto& n = needs[static_cast<std::size_t>(members[mi])];
      if (left == 0) return solve(mi + 1, 0, mi + 1 < members.size() ? needs[static_cast<std::size_t>(members[mi + 1])].need : 0);
      for (std::size_t k = from; k < n.options.size(); ++k) {
        const int w = n.options[k];
        const auto nb = g.neighbors(w);
        if (std::any_of(nb.begin(), nb.end(), [&](int x) { return chosen[static_cast<std::size_t>(x)]; })) continue;
        chosen[static_cast<std::size_t>(w)] = 1;
        picked.push_back(w);
        if (solve(mi, k + 1, left - 1)) return true;
        chosen[static_cast<std::size_t>(w)] = 0;
        picked.pop_back();
      }
      return false;
    };
    if (!solve(0, 0, needs[static_cast<std::size_t>(members[0])].need)) return std::nullopt;
    leaves.insert(leaves.end(), picked.begin(), picked.end());
  }

  std::vector<int> tiles = path;
  tiles.insert(tiles.end(), leaves.begin(), leaves.end());
  std::sort(tiles.begin(), tiles.end());
  return tiles;
}

namespace {

struct Piece {
  int entry;
  bool reversed;
};

class Lab {
 public:
  Lab(const Tiling& tl, const PrimeIndex& idx, const ExtendBudget& b)
      : tl_(tl), idx_(idx), budget_(b), start_(std::chrono::steady_clock::now()), on_path_(tl.graph.size(), 0) {}

  std::vector<int> oriented(const Piece& p) const {
    auto c = idx_.entries[static_cast<std::size_t>(p.entry)].chain;
    if (p.reversed) std::reverse(c.begin(), c.end());
    return c;
  }
  Side side(const Piece& p) const {
    const Side s = idx_.entries[static_cast<std::size_t>(p.entry)].side;
    return p.reversed ? flip(s) : s;
  }
  int angle(const Piece& p) const { return idx_.entries[static_cast<std::size_t>(p.entry)].angle; }
  int class_id(const Piece& p) const { return idx_.entries[static_cast<std::size_t>(p.entry)].class_id; }

  void push(bool right, Piece p, int junction) {
    if (right) {
      if (!pieces_.empty()) junctions_.push_back(junction);
      pieces_.push_back(p);
    } else {
      if (!pieces_.empty()) junctions_.push_front(junction);
      pieces_.push_front(p);
    }
    if (junction >= 0 && pieces_.size() > 1) mark(junction, 1);
    for (int v : oriented(p)) mark(v, 1);
  }
  void pop(bool right) {
    const Piece p = right ? pieces_.back() : pieces_.front();
    for (int v : oriented(p)) mark(v, 0);
    if (right) pieces_.pop_back();
    else pieces_.pop_front();
    if (!junctions_.empty()) {
      const int j = right ? junctions_.back() : junctions_.front();
      mark(j, 0);
      if (right) junctions_.pop_back();
      else junctions_.pop_front();
    }
  }

  struct Candidate {
    int angle;
    Side side;
    std::vector<int> chain;
    Piece piece;
    int junction;
    bool operator<(const Candidate& o) const {
      return std::tie(angle, side, chain, junction) < std::tie(o.angle, o.side, o.chain, o.junction);
    }
  };

  // Prime chains that can be grafted at one end, checked for an induced
  // derived path and side alternation but not yet for leaves.
  std::vector<Candidate> candidates(bool right) {
    const auto& g = tl_.graph;
    const Piece end = right ? pieces_.back() : pieces_.front();
    const auto end_chain = oriented(end);
    const int e = right ? end_chain.back() : end_chain.front();
    std::vector<Candidate> out;
    for (int j : g.neighbors(e)) {
      if (on_path(j) || !allowed(j) || path_degree(j) != 1) continue;
      for (int f : g.neighbors(j)) {
        if (f == e || on_path(f)) continue;
        for (auto [entry, at_back] : idx_.by_end[static_cast<std::size_t>(f)]) {
          // the new chain starts at f when growing right, ends there when growing left
          const Piece p{entry, right ? at_back : !at_back};
          const auto c = oriented(p);
          bool ok = true;
          for (int v : c) {
            if (on_path(v) || path_degree(v) != 0 || (v != f && g.adjacent(v, j))) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          if (side(p) == side(end)) continue;
          out.push_back({angle(p), side(p), c, p, j});
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<std::vector<int>> assemble() const {
    std::vector<std::vector<int>> chains;
    for (const auto& p : pieces_) chains.push_back(oriented(p));
    const std::vector<int> js(junctions_.begin(), junctions_.end());
    return assemble_caterpillar(tl_.graph, chains, js, idx_.allowed);
  }

  std::string word() const {
    std::string w;
    for (const auto& p : pieces_) w += static_cast<char>('0' + angle(p));
    return w;
  }

  // Violations that involve the prime at `at` in the current word.  Capes still
  // open at a word end are not final yet and are ignored.
  bool creates_violation(int at) const {
    const auto w = word();
    const int k = static_cast<int>(w.size());
    if (at > 0 && w[at - 1] == '4' && w[at] == '4') return true;
    if (at + 1 < k && w[at] == '4' && w[at + 1] == '4') return true;
    if (class_id(pieces_[static_cast<std::size_t>(at)]) == 1) return true;
    for (const auto& s : detect_sea_caterpillars(w)) {
      if (s.kind != "cape2" && s.kind != "cape3") continue;
      if (s.first == 0 || s.last == k - 1) continue;
      if (s.first - 1 <= at && at <= s.last + 1) return true;
    }
    return false;
  }

  bool tick() {
    ++nodes_;
    if (budget_.node_limit && nodes_ > budget_.node_limit) exhausted_ = true;
    if (budget_.time_limit_s > 0 && (nodes_ & 63) == 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() > budget_.time_limit_s)
      exhausted_ = true;
    return !exhausted_;
  }

  const Tiling& tl_;
  const PrimeIndex& idx_;
  ExtendBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::deque<Piece> pieces_;
  std::deque<int> junctions_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;

 private:
  bool on_path(int v) const { return on_path_[static_cast<std::size_t>(v)] != 0; }
  bool allowed(int v) const { return idx_.allowed[static_cast<std::size_t>(v)] != 0; }
  int path_degree(int v) const {
    int d = 0;
    for (int w : tl_.graph.neighbors(v)) d += on_path(w);
    return d;
  }
  void mark(int v, char x) { on_path_[static_cast<std::size_t>(v)] = x; }
  std::vector<char> on_path_;
};

std::vector<Piece> seed_pieces(const PrimeIndex& idx, const CaterpillarChain& seed) {
  std::map<std::vector<int>, int> by_chain;
  for (std::size_t i = 0; i < idx.entries.size(); ++i) by_chain.emplace(idx.entries[i].chain, static_cast<int>(i));
  std::vector<Piece> out;
  for (const auto& pc : seed.primes) {
    auto c = pc.chain;
    if (auto it = by_chain.find(c); it != by_chain.end()) {
      out.push_back({it->second, false});
      continue;
    }
    std::reverse(c.begin(), c.end());
    if (auto it = by_chain.find(c); it != by_chain.end()) {
      out.push_back({it->second, true});
      continue;
    }
    fail(ErrorKind::Invalid, "seed prime is not in the prime index (own star outside the patch or region)");
  }
  return out;
}

CaterpillarChain finish(const Tiling& tl, const std::vector<int>& tiles) {
  auto c = decompose(tl.graph, InducedSubtree(tl.graph, tiles));
  analyze_chain(tl, c);
  return c;
}

}  // namespace

ExtendReport extend_chain(const Tiling& tl, const PrimeIndex& idx, const CaterpillarChain& seed, const ExtendOptions& opt,
                          const ExtendBudget& budget) {
  if (opt.target < 0) fail(ErrorKind::Invalid, "extend_chain: target must be non-negative");
  if (seed.primes.empty() || !seed.partial.empty() || !seed.appendix.empty())
    fail(ErrorKind::Invalid, "extend_chain: seed must consist of grafted primes only");
  ExtendReport rep;
  rep.target = opt.target;
  rep.best = seed;
  if (angle_word(seed).find("44") != std::string::npos) {
    rep.rejected = true;
    rep.reason = "seed has two consecutive 4 angles";
    return rep;
  }

  Lab lab(tl, idx, budget);
  const auto pieces = seed_pieces(idx, seed);
  for (std::size_t i = 0; i < pieces.size(); ++i) lab.push(true, pieces[i], i ? seed.junctions[i - 1] : -1);
  for (std::size_t i = 1; i < pieces.size(); ++i)
    if (lab.side(pieces[i]) == lab.side(pieces[i - 1])) fail(ErrorKind::Invalid, "extend_chain: seed sides do not alternate");
  if (!lab.assemble()) fail(ErrorKind::Invalid, "extend_chain: seed is not a saturated caterpillar");

  int best_l = 0, best_r = 0;
  std::vector<int> best_tiles = seed.tiles;
  auto better = [&](int l, int r) {
    return std::pair(std::min(l, r), l + r) > std::pair(std::min(best_l, best_r), best_l + best_r);
  };

  std::function<bool(int, int)> dfs = [&](int l, int r) -> bool {
    if (better(l, r)) {
      best_l = l;
      best_r = r;
      best_tiles = *lab.assemble();
    }
    if (l >= opt.target && r >= opt.target) return true;
    const bool right = r < opt.target;
    auto try_side = [&](bool go_right) -> std::optional<bool> {
      bool any = false;
      for (const auto& c : lab.candidates(go_right)) {
        if (!lab.tick()) return false;
        lab.push(go_right, c.piece, c.junction);
        const int at = go_right ? static_cast<int>(lab.pieces_.size()) - 1 : 0;
        const bool ok = !(opt.prune_patterns && lab.creates_violation(at)) && lab.assemble();
        if (ok) {
          any = true;
          if (dfs(go_right ? l : l + 1, go_right ? r + 1 : r)) return true;
        }
        lab.pop(go_right);
        if (lab.exhausted_) return false;
      }
      if (!any) return std::nullopt;
      return false;
    };
    if (right) {
      const auto res = try_side(true);
      if (res) return *res;
      // the right side is stuck: carry on to the left from here
    }
    if (l < opt.target) {
      const auto res = try_side(false);
      if (res) return *res;
    }
    return false;
  };
  rep.met = dfs(0, 0);
  rep.partial = lab.exhausted_ && !rep.met;
  rep.nodes = lab.nodes_;
  rep.left_max = best_l;
  rep.right_max = best_r;
  rep.best = finish(tl, best_tiles);
  return rep;
}

std::vector<CaterpillarChain> find_chains(const Tiling& tl, const PrimeIndex& idx, std::string_view angles,
                                          std::size_t limit, const ExtendBudget& budget, std::optional<Cyclo10> focus) {
  if (angles.empty()) fail(ErrorKind::Invalid, "find_chain: empty angle word");
  std::vector<int> order(idx.entries.size());
  std::iota(order.begin(), order.end(), 0);
  if (focus) {
    // search order only, so floating distances are fine
    const auto f = (Cyclo10(4, 0, 0, 0) * *focus).embed();
    std::vector<double> d(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& ch = idx.entries[i].chain;
      d[i] = std::abs(tl.patch.tiles[static_cast<std::size_t>(ch[ch.size() / 2])].corner_sum().embed() - f);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[static_cast<std::size_t>(a)] < d[static_cast<std::size_t>(b)]; });
  }
  Lab lab(tl, idx, budget);
  std::function<bool()> dfs = [&]() -> bool {
    if (lab.pieces_.size() == angles.size()) return true;
    for (const auto& c : lab.candidates(true)) {
      if (c.angle != angles[lab.pieces_.size()] - '0') continue;
      if (!lab.tick()) return false;
      lab.push(true, c.piece, c.junction);
      if (lab.assemble() && dfs()) return true;
      lab.pop(true);
      if (lab.exhausted_) return false;
    }
    return false;
  };
  std::vector<CaterpillarChain> out;
  std::set<std::vector<int>> seen;
  for (const int i : order)
    for (bool rev : {false, true}) {
      if (out.size() >= limit) return out;
      const Piece p{i, rev};
      if (lab.angle(p) != angles[0] - '0') continue;
      lab.push(true, p, -1);
      if (dfs()) {
        auto c = finish(tl, *lab.assemble());
        if (seen.insert(c.tiles).second) out.push_back(std::move(c));
        while (lab.pieces_.size() > 1) lab.pop(true);
      }
      lab.pop(true);
      if (lab.exhausted_) fail(ErrorKind::Budget, "find_chain: budget exhausted");
    }
  return out;
}

std::optional<CaterpillarChain> find_chain(const Tiling& tl, const PrimeIndex& idx, std::string_view angles,
                                           const ExtendBudget& budget, std::optional<Cyclo10> focus) {
  auto found = find_chains(tl, idx, angles, 1, budget, focus);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

void write_extend(std::ostream& os, const ExtendFile& f) {
  os << "EXTEND v1\n";
  os << "seed " << f.seed << '\n';
  os << "leftmax " << f.left_max << " rightmax " << f.right_max << " target " << f.target << " met " << (f.met ? 1 : 0)
     << '\n';
  write_chain(os, f.chain);
}

ExtendFile read_extend(std::istream& is) {
  constexpr const char* fmt = "EXTEND";
  textio::expect_header(is, "EXTEND v1");
  ExtendFile f;
  const auto seed = textio::next_line(is, fmt);
  if (seed.rfind("seed ", 0) != 0) fail(ErrorKind::Invalid, "EXTEND: expected 'seed <path>'");
  f.seed = seed.substr(5);
  const auto w = textio::split(textio::next_line(is, fmt));
  if (w.size() != 8 || w[0] != "leftmax" || w[2] != "rightmax" || w[4] != "target" || w[6] != "met")
    fail(ErrorKind::Invalid, "EXTEND: expected 'leftmax <l> rightmax <r> target <t> met <0|1>'");
  f.left_max = static_cast<int>(textio::to_int(w[1], fmt));
  f.right_max = static_cast<int>(textio::to_int(w[3], fmt));
  f.target = static_cast<int>(textio::to_int(w[5], fmt));
  if (w[7] != "0" && w[7] != "1") fail(ErrorKind::Invalid, "EXTEND: met must be 0 or 1");
  f.met = w[7] == "1";
  f.chain = read_chain(is);
  return f;
}

std::string extend_to_string(const ExtendFile& f) {
  std::ostringstream os;
  write_extend(os, f);
  return os.str();
}

ExtendFile extend_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_extend(is);
}

}  // namespace p2flis
