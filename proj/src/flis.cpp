#include "p2flis/flis.hpp"

#include <map>

#include "p2flis/canonical.hpp"
#include "p2flis/error.hpp"
#include "p2flis/subtree.hpp"

namespace p2flis {

FlisCensus enumerate_flis(const Patch& p, const P2Graph& g, const FlisQuery& q, SearchBudget budget) {
  if (g.size() != p.size()) fail(ErrorKind::Invalid, "graph does not belong to the patch");
  budget.witness_cap = 0;
  const auto rec = search_max_leaves(g, q.n, budget);
  if (rec.partial) fail(ErrorKind::Budget, "enumerate_flis: search budget exhausted at n=" + std::to_string(q.n));

  FlisCensus out;
  out.n = q.n;
  out.max_leaves = rec.max_leaves;
  std::map<std::string, FlisClass> by_sig;
  for (const auto& w : rec.witnesses) {
    const InducedSubtree t(g, w);
    const auto internal = t.internal();
    if (q.internal_tiles && static_cast<int>(internal.size()) != *q.internal_tiles) continue;
    ++out.witnesses;
    const auto sig = tile_set_signature(p, q.mode == SignatureMode::InternalTiles ? internal : w);
    auto& c = by_sig[sig];
    if (c.instances++ == 0) {
      c.signature = sig;
      c.representative = w;
    }
  }
  for (auto& [sig, c] : by_sig) out.classes.push_back(std::move(c));
  return out;
}

}  // namespace p2flis
