#include "p2flis/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <ostream>
#include <queue>
#include <sstream>
#include <thread>

#include "p2flis/error.hpp"
#include "p2flis/text_io.hpp"

namespace p2flis {
namespace {

using Clock = std::chrono::steady_clock;

struct RootResult {
  std::priority_queue<std::vector<int>> kept;  // max-heap: largest on top, trimmed to the cap
  std::uint64_t count = 0;
};

// Shared state of one threshold pass.
struct Pass {
  const P2Graph& g;
  int n;
  int threshold;
  std::span<const char> allowed;
  const SearchBudget& budget;
  Clock::time_point start;

  std::atomic<int> next_root{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<int> cutoff;  // roots above this are not needed

  std::mutex mu;
  std::map<int, RootResult> results;
  int prefix_root = -1;  // every root <= prefix_root is finished
  std::uint64_t prefix_count = 0;
  std::vector<char> finished;

  Pass(const P2Graph& g_, int n_, int t_, std::span<const char> a_, const SearchBudget& b_)
      : g(g_), n(n_), threshold(t_), allowed(a_), budget(b_), start(Clock::now()),
        cutoff(static_cast<int>(g_.size())), finished(g_.size(), 0) {}

  bool is_allowed(int v) const { return allowed.empty() || allowed[static_cast<std::size_t>(v)]; }

  void finish_root(int root, RootResult r) {
    std::lock_guard lock(mu);
    finished[static_cast<std::size_t>(root)] = 1;
    if (r.count) results.emplace(root, std::move(r));
    if (budget.witness_cap == 0) return;
    while (prefix_root + 1 < static_cast<int>(finished.size()) && finished[static_cast<std::size_t>(prefix_root) + 1]) {
      ++prefix_root;
      if (auto it = results.find(prefix_root); it != results.end()) prefix_count += it->second.count;
      if (prefix_count >= budget.witness_cap) {
        cutoff.store(std::min(cutoff.load(), prefix_root));
        return;
      }
    }
  }
};

// Anchored include/exclude enumeration from a single root.  The root is the
// smallest tile of every tree it builds, so each tree is produced exactly once.
class Engine {
 public:
  Engine(Pass& pass, bool degree_bound)
      : pass_(pass), g_(pass.g), degree_bound_(degree_bound) {
    const std::size_t sz = g_.size();
    in_tree_.assign(sz, 0);
    excluded_.assign(sz, 0);
    cnt_.assign(sz, 0);
    deg_.assign(sz, 0);
    pot_.assign(sz, 0);
    closed_.assign(sz, 0);
  }

  void run_root(int root) {
    root_ = root;
    aborted_ = false;
    result_ = RootResult{};
    in_tree_[root] = 1;
    tree_.assign(1, root);
    leaves_ = 0;
    closed2_ = 0;
    for (int w : g_.neighbors(root)) {
      ++cnt_[w];
      if (eligible(w)) {
        ++pot_[root];
        border_.push_back(w);
      }
    }
    recurse(0);
    for (int w : g_.neighbors(root)) --cnt_[w];
    pot_[root] = 0;
    in_tree_[root] = 0;
    border_.clear();
    tree_.clear();
  }

  bool aborted() const { return aborted_; }
  RootResult take_result() { return std::move(result_); }
  std::uint64_t flush_nodes() {
    const auto n = local_nodes_ - local_flushed_;
    local_flushed_ = local_nodes_;
    return n;
  }

 private:
  bool eligible(int w) const { return w > root_ && !excluded_[w] && pass_.is_allowed(w); }
  bool valid(int w) const { return !in_tree_[w] && cnt_[w] == 1 && eligible(w); }

  int tree_neighbor(int w, int skip = -1) const {
    for (int x : g_.neighbors(w))
      if (in_tree_[x] && x != skip) return x;
    return -1;
  }

  void refresh_closed(int v) {
    const std::uint8_t now = in_tree_[v] && deg_[v] == 2 && pot_[v] == 0;
    closed2_ += static_cast<int>(now) - static_cast<int>(closed_[v]);
    closed_[v] = now;
  }

  void include(int c, int p) {
    const int dp = deg_[p];
    leaves_ += (dp == 0 ? 1 : dp == 1 ? -1 : 0) + 1;
    ++deg_[p];
    --pot_[p];
    in_tree_[c] = 1;
    deg_[c] = 1;
    tree_.push_back(c);
    for (int w : g_.neighbors(c)) {
      if (w == p) continue;
      const int k = ++cnt_[w];
      if (in_tree_[w]) continue;
      if (k == 1) {
        if (eligible(w)) {
          ++pot_[c];
          border_.push_back(w);
        }
      } else if (k == 2 && eligible(w)) {
        const int q = tree_neighbor(w, c);
        --pot_[q];
        refresh_closed(q);
      }
    }
    refresh_closed(p);
    refresh_closed(c);
  }

  void undo_include(int c, int p, int old_leaves) {
    const auto nb = g_.neighbors(c);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
      const int w = *it;
      if (w == p) continue;
      if (!in_tree_[w]) {
        if (cnt_[w] == 1) {
          if (eligible(w)) {
            --pot_[c];
            border_.pop_back();
          }
        } else if (cnt_[w] == 2 && eligible(w)) {
          const int q = tree_neighbor(w, c);
          ++pot_[q];
          refresh_closed(q);
        }
      }
      --cnt_[w];
    }
    in_tree_[c] = 0;
    deg_[c] = 0;
    pot_[c] = 0;
    refresh_closed(c);
    tree_.pop_back();
    --deg_[p];
    ++pot_[p];
    leaves_ = old_leaves;
    refresh_closed(p);
  }

  bool over_budget() {
    if (pass_.out_of_budget.load(std::memory_order_relaxed)) return true;
    if ((local_nodes_ & 4095) != 0) return false;
    const auto total = pass_.nodes.fetch_add(4096, std::memory_order_relaxed) + 4096;
    local_flushed_ += 4096;
    if (pass_.budget.node_limit && total > pass_.budget.node_limit) pass_.out_of_budget = true;
    if (pass_.budget.time_limit_s > 0) {
      const std::chrono::duration<double> dt = Clock::now() - pass_.start;
      if (dt.count() > pass_.budget.time_limit_s) pass_.out_of_budget = true;
    }
    return pass_.out_of_budget.load(std::memory_order_relaxed);
  }

  void record() {
    std::vector<int> w = tree_;
    std::sort(w.begin(), w.end());
    ++result_.count;
    const std::size_t cap = pass_.budget.witness_cap;
    if (cap == 0 || result_.kept.size() < cap) {
      result_.kept.push(std::move(w));
    } else if (w < result_.kept.top()) {
      result_.kept.pop();
      result_.kept.push(std::move(w));
    }
  }

  void recurse(std::size_t head) {
    if (aborted_) return;
    ++local_nodes_;
    if (over_budget() || root_ > pass_.cutoff.load(std::memory_order_relaxed)) {
      aborted_ = true;
      return;
    }
    const int size = static_cast<int>(tree_.size());
    const int n = pass_.n;
    if (size == n) {
      if (leaves_ >= pass_.threshold) record();
      return;
    }
    const int k = n - size;
    int ub = size == 1 ? k + 1 : leaves_ + k;
    if (degree_bound_) ub = std::min(ub, (n + 2 - closed2_) / 2);
    if (ub < pass_.threshold) return;

    std::size_t i = head;
    while (i < border_.size() && !valid(border_[i])) ++i;
    if (i == border_.size()) return;
    const int c = border_[i];
    const int p = tree_neighbor(c);

    const int old_leaves = leaves_;
    include(c, p);
    recurse(i + 1);
    undo_include(c, p, old_leaves);
    if (aborted_) return;

    excluded_[c] = 1;
    --pot_[p];
    refresh_closed(p);
    recurse(i + 1);
    ++pot_[p];
    refresh_closed(p);
    excluded_[c] = 0;
  }

  Pass& pass_;
  const P2Graph& g_;
  bool degree_bound_;
  std::vector<std::uint8_t> in_tree_, excluded_, cnt_, deg_, pot_, closed_;
  std::vector<int> border_, tree_;
  int root_ = 0;
  int leaves_ = 0;
  int closed2_ = 0;
  bool aborted_ = false;
  RootResult result_;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t local_flushed_ = 0;
};

struct PassOutcome {
  std::vector<std::vector<int>> witnesses;
  std::uint64_t count = 0;
  bool complete = true;
  bool out_of_budget = false;
  std::uint64_t nodes = 0;
};

PassOutcome run_pass(const P2Graph& g, int n, int threshold, std::span<const char> allowed,
                     const SearchBudget& budget, bool degree_bound) {
  Pass pass(g, n, threshold, allowed, budget);
  const int roots = static_cast<int>(g.size());
  auto worker = [&] {
    Engine e(pass, degree_bound);
    for (;;) {
      const int r = pass.next_root.fetch_add(1);
      if (r >= roots || pass.out_of_budget) break;
      if (r > pass.cutoff.load()) break;
      if (!pass.is_allowed(r)) {
        pass.finish_root(r, {});
        continue;
      }
      e.run_root(r);
      if (e.aborted()) {
        if (pass.out_of_budget) break;
        continue;  // beyond the cut-off
      }
      pass.finish_root(r, e.take_result());
    }
    pass.nodes += e.flush_nodes();
  };
  const unsigned t = std::max(1u, budget.threads);
  if (t == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
  }

  PassOutcome out;
  out.nodes = pass.nodes.load();
  out.out_of_budget = pass.out_of_budget.load();
  const int cutoff = pass.cutoff.load();
  out.complete = cutoff >= roots && !out.out_of_budget;
  for (auto& [root, res] : pass.results) {
    if (root > cutoff) break;
    out.count += res.count;
    std::vector<std::vector<int>> mine;
    while (!res.kept.empty()) {
      mine.push_back(res.kept.top());
      res.kept.pop();
    }
    std::reverse(mine.begin(), mine.end());
    for (auto& w : mine) out.witnesses.push_back(std::move(w));
  }
  if (budget.witness_cap && out.witnesses.size() > budget.witness_cap) {
    out.witnesses.resize(budget.witness_cap);
    out.complete = false;
  }
  return out;
}

void check_args(const P2Graph& g, int n, std::span<const char> allowed) {
  if (n < 0) fail(ErrorKind::Invalid, "order must be non-negative");
  if (static_cast<std::size_t>(n) > g.size()) fail(ErrorKind::Invalid, "order exceeds the number of tiles");
  if (!allowed.empty() && allowed.size() != g.size()) fail(ErrorKind::Invalid, "allowed mask has the wrong size");
}

LeafRecord trivial_order(const P2Graph& g, int n, std::span<const char> allowed, const SearchBudget& budget) {
  LeafRecord r;
  r.n = n;
  r.witnesses_complete = true;
  if (n == 0) {
    r.witnesses.emplace_back();
    r.optimal_count = 1;
    return r;
  }
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    if (!allowed.empty() && !allowed[static_cast<std::size_t>(v)]) continue;
    ++r.optimal_count;
    if (budget.witness_cap == 0 || r.witnesses.size() < budget.witness_cap)
      r.witnesses.push_back({v});
    else
      r.witnesses_complete = false;
  }
  return r;
}

}  // namespace

LeafRecord enumerate_trees_with_leaves(const P2Graph& g, int n, int leaves, const SearchBudget& budget,
                                       std::span<const char> allowed) {
  check_args(g, n, allowed);
  if (n <= 1) {
    if (leaves == 0) return trivial_order(g, n, allowed, budget);
    LeafRecord none;
    none.n = n;
    none.max_leaves = leaves;
    none.witnesses_complete = true;
    return none;
  }
  const bool degree_bound = !has_induced_claw4(g);
  auto out = run_pass(g, n, leaves, allowed, budget, degree_bound);
  LeafRecord r;
  r.n = n;
  r.max_leaves = leaves;
  r.upper_bound = leaves;
  r.partial = out.out_of_budget;
  r.witnesses_complete = out.complete;
  r.optimal_count = out.count;
  r.nodes = out.nodes;
  // the threshold admits more leaves; keep only exact matches
  for (auto& w : out.witnesses) {
    int lv = 0;
    for (int v : w) {
      int d = 0;
      for (int x : g.neighbors(v)) d += std::binary_search(w.begin(), w.end(), x);
      lv += d == 1;
    }
    if (lv == leaves) r.witnesses.push_back(std::move(w));
  }
  return r;
}

LeafRecord search_max_leaves(const P2Graph& g, int n, const SearchBudget& budget, std::span<const char> allowed) {
  check_args(g, n, allowed);
  if (n <= 1) return trivial_order(g, n, allowed, budget);

  const bool degree_bound = !has_induced_claw4(g);
  // without a vertex of degree 4, leaves = (n + 2 - #degree-2) / 2
  const int top = degree_bound ? n / 2 + 1 : n;
  LeafRecord r;
  r.n = n;
  for (int t = top; t >= 2; --t) {
    auto out = run_pass(g, n, t, allowed, budget, degree_bound);
    r.nodes += out.nodes;
    if (!out.witnesses.empty()) {
      // t + 1 was refuted, so t is exact even if the witness list was cut short
      r.max_leaves = t;
      r.upper_bound = t;
      r.witnesses = std::move(out.witnesses);
      r.optimal_count = out.count;
      r.witnesses_complete = out.complete;
      return r;
    }
    if (out.out_of_budget) {
      r.partial = true;
      r.upper_bound = t;
      r.max_leaves = 0;
      return r;
    }
  }
  fail(ErrorKind::Invalid, "no induced subtree of order " + std::to_string(n) + " among the allowed tiles");
}

LeafRecord search_across_levels(std::span<const P2Graph> graphs, int n, const SearchBudget& budget) {
  if (graphs.empty()) fail(ErrorKind::Invalid, "no graphs given");
  LeafRecord last;
  int previous = -1;
  for (const auto& g : graphs) {
    const int prior = previous;
    last = search_max_leaves(g, n, budget);
    previous = last.partial ? -1 : last.max_leaves;
    last.stable = prior >= 0 && !last.partial && prior == last.max_leaves;
  }
  return last;
}

void write_flis(std::ostream& os, const LeafRecord& r) {
  os << "FLIS v1\n";
  os << "n " << r.n << " maxleaves " << r.max_leaves << " stable " << (r.stable ? 1 : 0) << '\n';
  if (r.partial) os << "status partial\n";
  for (const auto& w : r.witnesses) {
    os << "witness";
    for (int v : w) os << ' ' << v;
    os << '\n';
  }
}

LeafRecord read_flis(std::istream& is) {
  constexpr const char* fmt = "FLIS";
  textio::expect_header(is, "FLIS v1");
  const auto head = textio::split(textio::next_line(is, fmt));
  if (head.size() != 6 || head[0] != "n" || head[2] != "maxleaves" || head[4] != "stable")
    fail(ErrorKind::Invalid, "FLIS: expected 'n <n> maxleaves <L> stable <0|1>'");
  LeafRecord r;
  r.n = static_cast<int>(textio::to_int(head[1], fmt));
  r.max_leaves = static_cast<int>(textio::to_int(head[3], fmt));
  r.upper_bound = r.max_leaves;
  const auto st = textio::to_int(head[5], fmt);
  if (st != 0 && st != 1) fail(ErrorKind::Invalid, "FLIS: stable must be 0 or 1");
  r.stable = st == 1;
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto w = textio::split(line);
    if (w.size() == 2 && w[0] == "status" && w[1] == "partial" && r.witnesses.empty()) {
      r.partial = true;
      continue;
    }
    if (w.empty() || w[0] != "witness") fail(ErrorKind::Invalid, "FLIS: malformed line '" + line + "'");
    std::vector<int> ids;
    for (std::size_t i = 1; i < w.size(); ++i) ids.push_back(static_cast<int>(textio::to_int(w[i], fmt)));
    if (!std::is_sorted(ids.begin(), ids.end())) fail(ErrorKind::Invalid, "FLIS: witness ids must be ascending");
    r.witnesses.push_back(std::move(ids));
  }
  r.optimal_count = r.witnesses.size();
  return r;
}

std::string flis_to_string(const LeafRecord& r) {
  std::ostringstream os;
  write_flis(os, r);
  return os.str();
}

LeafRecord flis_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_flis(is);
}

}  // namespace p2flis
