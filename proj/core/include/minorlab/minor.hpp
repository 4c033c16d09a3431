#pragma once

#include <vector>

#include "minorlab/contraction.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

// Full record of a greedy contraction run.
struct ContractionTrace {
  int initial_order = 0;
  int terminal_order = 0;
  std::vector<ContractionStep> steps;
  int step_count() const { return static_cast<int>(steps.size()); }
  bool operator==(const ContractionTrace&) const = default;
};

// Greedy contraction to a complete graph.  Each round scores every ordered
// adjacent pair (removed, survivor) by replacement_count and contracts the
// best one via update_exact.  Ties break by the larger unit-count gap
// between the endpoints, then by the lexicographically smallest
// (survivor, removed) pair, so the whole trace is deterministic.  Requires
// a connected graph.
ContractionTrace greedy_contract(const Graph& g);

// Disjoint connected branch sets, pairwise joined by at least one edge.
struct MinorCertificate {
  std::vector<VertexSet> branch_sets;
  int order() const { return static_cast<int>(branch_sets.size()); }
  bool operator==(const MinorCertificate&) const = default;
};

bool verify_certificate(const Graph& g, const MinorCertificate& cert);

struct HadwigerResult {
  int number = 0;
  MinorCertificate certificate;
};

// Largest t such that g has a complete minor of order t, by exhaustive
// enumeration of branch-set families (depth-first over vertices in label
// order: leave out, join an open set, or open a new one).  max_order is
// the refusal threshold; the default keeps runs instantaneous, and raising
// it to 10 is still cheap.  The returned certificate always verifies.
HadwigerResult hadwiger_number(const Graph& g, int max_order = 9);

}  // namespace minorlab
