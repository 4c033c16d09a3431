#pragma once

#include <string>
#include <vector>

#include "minorlab/distance.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

// All-pairs hop-distance matrix of a graph, indexed by the graph's stable
// vertex labels.  Rows and columns of dead labels simply do not exist as
// far as the queries are concerned; contraction updates kill a label in
// place, mirroring what Graph does.
class TransparencyMatrix {
 public:
  static TransparencyMatrix compute(const Graph& g);  // BFS per vertex

  int capacity() const { return capacity_; }
  int order() const { return vcount(live_); }
  VertexSet live_mask() const { return live_; }
  std::vector<int> vertices() const;

  Dist at(int m, int n) const;
  void set(int m, int n, Dist d);  // symmetric store, used by updaters
  void kill(int v);                // delete row and column v

  bool is_complete() const;  // every live off-diagonal entry is 1

  // Entry == 1 thresholding; equals the adjacency of the source graph.
  std::vector<VertexSet> threshold_to_adjacency() const;

  int degree_of(int v) const;  // unit entries in row v

  // Exact, capped at order 20: these back the chromatic lower bound and
  // the partite-representation checks, nothing larger is ever asked.
  int clique_number() const;
  int independence_number() const;  // off-diagonal >= 2, sentinel counts

  // Debug grid: one row per live vertex, right-aligned cells, single
  // space separation, "inf" for the sentinel.
  std::string dump() const;

  bool operator==(const TransparencyMatrix&) const = default;

 private:
  void check_live(int v, const char* who) const;
  std::size_t idx(int m, int n) const {
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(capacity_) +
           static_cast<std::size_t>(n);
  }

  int capacity_ = 0;
  VertexSet live_ = 0;
  std::vector<Dist> cells_;
};

}  // namespace minorlab
