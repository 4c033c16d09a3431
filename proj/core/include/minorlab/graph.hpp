#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minorlab/bits.hpp"
#include "minorlab/errors.hpp"

namespace minorlab {

inline constexpr int kMaxOrder = 62;  // graph6 short form bound

// Simple undirected graph with stable vertex labels.  Labels live in
// 0..capacity-1; contraction and vertex removal kill a label without
// renumbering the survivors, so labels stay meaningful across a whole
// contraction trace.  Labels are only compacted back to 0..p-1 when a
// graph is serialized.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);  // n isolated vertices labelled 0..n-1

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int capacity() const { return capacity_; }
  int order() const { return vcount(live_); }
  int size() const;  // number of edges
  VertexSet live_mask() const { return live_; }
  bool is_live(int v) const {
    return v >= 0 && v < capacity_ && vcontains(live_, v);
  }
  std::vector<int> vertices() const;  // live labels, ascending

  void add_edge(int u, int v);  // rejects self-loops; parallel adds collapse
  bool has_edge(int u, int v) const;
  VertexSet neighbors(int v) const;
  int degree(int v) const { return vcount(neighbors(v)); }

  bool is_connected() const;

  // (removed => survivor): survivor inherits the union of both
  // neighbourhoods minus the pair itself.  Requires a live adjacent pair.
  Graph contract_edge(int removed, int survivor) const;

  Graph remove_edge(int u, int v) const;
  Graph remove_vertex(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_live(int v, const char* who) const;

  int capacity_ = 0;
  VertexSet live_ = 0;
  std::vector<VertexSet> adj_;
};

// graph6 short form, one graph per line.  parse accepts an optional
// ">>graph6<<" header and reports malformed input with the byte offset.
// emit writes the canonical line for the labelled graph, compacting live
// labels to 0..p-1 in ascending order; parse(emit(g)) reproduces a graph
// whose labels are already dense exactly.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// Fixed families used throughout the tests and the sweep corpora.
Graph make_cycle(int n);                // n >= 3
Graph make_complete(int n);             // n >= 1
Graph make_complete_minus_edge(int n);  // K_n minus the edge (n-2, n-1)
Graph make_petersen();
Graph make_gnp(int n, double p, std::uint64_t seed);

// Every connected labelled graph on 1..max_n vertices, each exactly once,
// in a fixed order: by order, then by edge-mask value (graph6 bit order).
// No isomorphism rejection; labelled means labelled.
void for_each_labeled_connected(int max_n,
                                const std::function<void(const Graph&)>& fn);

}  // namespace minorlab
