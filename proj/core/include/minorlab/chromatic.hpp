#pragma once

#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// A partition of the live vertices into independent parts.  Parts are kept
// sorted by their lowest vertex so equal partitions serialize identically.
struct PartiteRepresentation {
  std::vector<VertexSet> parts;
  bool operator==(const PartiteRepresentation&) const = default;
};

// Nonempty, pairwise disjoint, covering, and every part independent.
bool is_valid_partition(const Graph& g, const PartiteRepresentation& rep);

// Exact chromatic number, branch and bound between the clique lower bound
// and a greedy upper bound.  max_order is the refusal threshold.
int chromatic_number(const Graph& g, int max_order = 16);

// Colour classes of one optimal colouring (deterministic).
PartiteRepresentation minimal_partite_representation(const Graph& g,
                                                     int max_order = 16);

// Every partition of the vertices into chromatic_number(g) independent
// parts, each exactly once, enumerated in restricted-growth order.
std::vector<PartiteRepresentation> all_minimal_representations(
    const Graph& g, int max_order = 8);

// True when all of the indexed part except a single element can migrate
// into some other part with both parts staying independent.  Quantifies
// over every kept element and every target part.  Only defined for parts
// with more than one element.
bool is_essentially_singleton(const Graph& g, const PartiteRepresentation& rep,
                              int part_index);

// Two vertices sharing a part plus one common neighbour outside it.
struct SeparatorPair {
  int first = -1;
  int second = -1;
  int witness = -1;  // lowest common neighbour
  bool operator==(const SeparatorPair&) const = default;
};
std::vector<SeparatorPair> find_separators(const Graph& g,
                                           const PartiteRepresentation& rep);

// True when every single-edge contraction strictly lowers the chromatic
// number.  Requires a connected graph with at least one edge.
bool is_contraction_sensitive(const Graph& g, int max_order = 16);

// Edge- and vertex-criticality evaluated separately: does deleting any one
// edge (vertex) strictly lower the chromatic number?
struct Criticality {
  bool edge_critical = false;
  bool vertex_critical = false;
  bool operator==(const Criticality&) const = default;
};
Criticality criticality(const Graph& g, int max_order = 16);

inline bool is_k_critical(const Graph& g, int max_order = 16) {
  const Criticality c = criticality(g, max_order);
  return c.edge_critical && c.vertex_critical;
}

}  // namespace minorlab
