#pragma once

#include <utility>
#include <vector>

#include "minorlab/graph.hpp"
#include "minorlab/transparency.hpp"

namespace minorlab {

// One executed contraction step.  replacements is the number of surviving
// unordered pairs whose distance entry dropped from >= 2 to exactly 1.
struct ContractionStep {
  int removed = -1;
  int survivor = -1;
  int replacements = 0;
  bool operator==(const ContractionStep&) const = default;
};

// Exact incremental distance update for the contraction (removed =>
// survivor).  For every surviving pair (m, n)
//   new(m,n) = min(old(m,n),
//                  min(old(m,removed), old(m,survivor))
//                  + min(old(removed,n), old(survivor,n)))
// then the removed row and column are deleted.  Equals a fresh BFS
// recomputation on the contracted graph; the tests enforce that
// exhaustively on small orders.
TransparencyMatrix update_exact(const TransparencyMatrix& t, const Graph& g,
                                int removed, int survivor);

// The five-rule textbook update, applied to the letter: min-merge the
// survivor row/column with the removed one, delete the removed row/column,
// and decrement an interior pair (m, n) only when the pre-update entries
// satisfied  a(m,n) == a(m,removed) + a(survivor,n) + 1  with the roles
// assigned as written (the pair is checked once, with m < n).  The rule is
// deliberately not symmetrized; divergence from update_exact is measured,
// not patched.
TransparencyMatrix update_paper_literal(const TransparencyMatrix& t,
                                        int removed, int survivor);

// The decrement condition itself, for one oriented choice of roles.
bool uses_edge_condition(const TransparencyMatrix& t, int m, int n, int i,
                         int j);

// How many surviving unordered pairs would drop from >= 2 to 1 under
// update_exact(t, g, removed, survivor).  Pure query.  Note this depends
// on the orientation: the merged row is compared against the survivor's
// old row, so contracting towards the poorer endpoint scores higher.
int replacement_count(const TransparencyMatrix& t, const Graph& g,
                      int removed, int survivor);

// Surviving unordered pairs (m < n) where the literal updater disagrees
// with the exact one for this contraction.  Empty means they agree.
std::vector<std::pair<int, int>> divergence_positions(
    const TransparencyMatrix& t, const Graph& g, int removed, int survivor);

}  // namespace minorlab
