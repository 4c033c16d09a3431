#pragma once

#include <span>

#include "minorlab/bits.hpp"

namespace minorlab {

// Exact maximum clique over an adjacency-mask array restricted to the
// vertices in cand.  adj is indexed by label; only labels inside cand are
// consulted.  Intended for small instances (callers cap the order).
int max_clique_size(std::span<const VertexSet> adj, VertexSet cand);

// The clique itself (lowest-first deterministic search order).
VertexSet max_clique_set(std::span<const VertexSet> adj, VertexSet cand);

}  // namespace minorlab
