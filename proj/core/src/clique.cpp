#include "minorlab/clique.hpp"

#include <array>

namespace minorlab {

namespace {

struct CliqueSearch {
  std::span<const VertexSet> adj;
  int best = 0;
  VertexSet best_set = 0;

  // Greedy colouring of cand; the number of colour classes bounds the
  // largest clique inside cand.
  int color_bound(VertexSet cand) const {
    int classes = 0;
    while (cand) {
      ++classes;
      VertexSet avail = cand;
      while (avail) {
        const int v = vlowest(avail);
        avail &= ~adj[static_cast<std::size_t>(v)];
        avail &= avail - 1;  // drop v itself (v is its lowest bit)
        cand &= ~vbit(v);
      }
    }
    return classes;
  }

  void expand(VertexSet cur, VertexSet cand) {
    if (cand == 0) {
      if (vcount(cur) > best) {
        best = vcount(cur);
        best_set = cur;
      }
      return;
    }
    if (vcount(cur) + color_bound(cand) <= best) return;
    const int v = vlowest(cand);
    expand(cur | vbit(v), cand & adj[static_cast<std::size_t>(v)]);
    expand(cur, cand & ~vbit(v));
  }
};

}  // namespace

int max_clique_size(std::span<const VertexSet> adj, VertexSet cand) {
  CliqueSearch s{adj};
  s.expand(0, cand);
  return s.best;
}

VertexSet max_clique_set(std::span<const VertexSet> adj, VertexSet cand) {
  CliqueSearch s{adj};
  s.expand(0, cand);
  return s.best_set;
}

}  // namespace minorlab
