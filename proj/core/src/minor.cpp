#include "minorlab/minor.hpp"

#include <cstdlib>
#include <stdexcept>

#include "minorlab/transparency.hpp"

namespace minorlab {

ContractionTrace greedy_contract(const Graph& start) {
  if (!start.is_connected())
    throw std::invalid_argument("greedy_contract: graph disconnected");
  ContractionTrace trace;
  trace.initial_order = start.order();

  Graph g = start;
  TransparencyMatrix t = TransparencyMatrix::compute(g);
  while (!t.is_complete()) {
    ContractionStep best;
    bool have = false;
    int best_gap = -1;
    const std::vector<int> verts = g.vertices();
    for (int a : verts)
      for (int b : verts) {
        if (a == b || !g.has_edge(a, b)) continue;
        ContractionStep cand{a, b, replacement_count(t, g, a, b)};
        const int gap = std::abs(t.degree_of(a) - t.degree_of(b));
        const bool wins =
            !have || cand.replacements > best.replacements ||
            (cand.replacements == best.replacements &&
             (gap > best_gap ||
              (gap == best_gap && (cand.survivor < best.survivor ||
                                   (cand.survivor == best.survivor &&
                                    cand.removed < best.removed)))));
        if (wins) {
          best = cand;
          best_gap = gap;
          have = true;
        }
      }
    t = update_exact(t, g, best.removed, best.survivor);
    g = g.contract_edge(best.removed, best.survivor);
    trace.steps.push_back(best);
  }
  trace.terminal_order = g.order();
  return trace;
}

bool verify_certificate(const Graph& g, const MinorCertificate& cert) {
  VertexSet seen = 0;
  for (VertexSet set : cert.branch_sets) {
    if (set == 0) return false;
    if (set & seen) return false;
    if (set & ~g.live_mask()) return false;
    seen |= set;
    // Connectivity of the induced branch set.
    VertexSet comp = vbit(vlowest(set));
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & set & ~comp;
      comp |= frontier;
    }
    if (comp != set) return false;
  }
  for (std::size_t a = 0; a < cert.branch_sets.size(); ++a) {
    VertexSet nbrs = 0;
    for_each_vertex(cert.branch_sets[a],
                    [&](int v) { nbrs |= g.neighbors(v); });
    for (std::size_t b = a + 1; b < cert.branch_sets.size(); ++b)
      if (!(nbrs & cert.branch_sets[b])) return false;
  }
  return true;
}

namespace {

struct BranchSearch {
  const Graph* g;
  std::vector<int> verts;
  std::vector<VertexSet> sets;
  int best = 0;
  std::vector<VertexSet> best_sets;

  void rec(std::size_t pos) {
    const int open = static_cast<int>(sets.size());
    const int remaining = static_cast<int>(verts.size() - pos);
    if (open + remaining <= best) return;
    if (pos == verts.size()) {
      MinorCertificate cert{sets};
      if (open > best && verify_certificate(*g, cert)) {
        best = open;
        best_sets = sets;
      }
      return;
    }
    const int v = verts[pos];
    rec(pos + 1);  // leave v out
    for (auto& set : sets) {
      set |= vbit(v);
      rec(pos + 1);
      set &= ~vbit(v);
    }
    sets.push_back(vbit(v));
    rec(pos + 1);
    sets.pop_back();
  }
};

}  // namespace

HadwigerResult hadwiger_number(const Graph& g, int max_order) {
  if (g.order() > max_order)
    throw BudgetExceeded("hadwiger_number order budget exceeded", g.order(),
                         max_order);
  BranchSearch s;
  s.g = &g;
  s.verts = g.vertices();
  s.rec(0);
  return {s.best, MinorCertificate{s.best_sets}};
}

}  // namespace minorlab
