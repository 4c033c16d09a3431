#include "minorlab/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace minorlab {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  if (n > kMaxOrder)
    throw std::invalid_argument("graph order exceeds supported range (62)");
  capacity_ = n;
  live_ = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_live(int v, const char* who) const {
  if (!is_live(v))
    throw std::invalid_argument(std::string(who) + ": vertex " +
                                std::to_string(v) + " is not live");
}

int Graph::size() const {
  int twice = 0;
  for_each_vertex(live_, [&](int v) { twice += degree(v); });
  return twice / 2;
}

std::vector<int> Graph::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(order()));
  for_each_vertex(live_, [&](int v) { out.push_back(v); });
  return out;
}

void Graph::add_edge(int u, int v) {
  check_live(u, "add_edge");
  check_live(v, "add_edge");
  if (u == v) throw std::invalid_argument("add_edge: self-loops not allowed");
  adj_[static_cast<std::size_t>(u)] |= vbit(v);
  adj_[static_cast<std::size_t>(v)] |= vbit(u);
}

bool Graph::has_edge(int u, int v) const {
  check_live(u, "has_edge");
  check_live(v, "has_edge");
  return vcontains(adj_[static_cast<std::size_t>(u)], v);
}

VertexSet Graph::neighbors(int v) const {
  check_live(v, "neighbors");
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::is_connected() const {
  if (live_ == 0) return true;
  VertexSet seen = vbit(vlowest(live_));
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier,
                    [&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == live_;
}

Graph Graph::contract_edge(int removed, int survivor) const {
  check_live(removed, "contract_edge");
  check_live(survivor, "contract_edge");
  if (removed == survivor)
    throw std::invalid_argument("contract_edge: identical endpoints");
  if (!has_edge(removed, survivor))
    throw std::invalid_argument(
        "contract_edge: pair not available for contraction");
  Graph g = *this;
  const VertexSet merged =
      (neighbors(removed) | neighbors(survivor)) & ~vbit(removed) &
      ~vbit(survivor);
  g.live_ &= ~vbit(removed);
  g.adj_[static_cast<std::size_t>(removed)] = 0;
  g.adj_[static_cast<std::size_t>(survivor)] = merged;
  for (int v = 0; v < capacity_; ++v) {
    g.adj_[static_cast<std::size_t>(v)] &= ~vbit(removed);
    if (vcontains(merged, v))
      g.adj_[static_cast<std::size_t>(v)] |= vbit(survivor);
  }
  return g;
}

Graph Graph::remove_edge(int u, int v) const {
  if (!has_edge(u, v))
    throw std::invalid_argument("remove_edge: no such edge");
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(u)] &= ~vbit(v);
  g.adj_[static_cast<std::size_t>(v)] &= ~vbit(u);
  return g;
}

Graph Graph::remove_vertex(int v) const {
  check_live(v, "remove_vertex");
  Graph g = *this;
  g.live_ &= ~vbit(v);
  g.adj_[static_cast<std::size_t>(v)] = 0;
  for (auto& row : g.adj_) row &= ~vbit(v);
  return g;
}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

// Bit k of the upper triangle enumerates pairs column-major:
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
int triangle_bits(int n) { return n * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) {
    base = kHeader.size();
    line.remove_prefix(kHeader.size());
  }
  if (line.empty()) throw Graph6Error("empty graph6 line", base);
  const unsigned char first = static_cast<unsigned char>(line[0]);
  if (first == 126)
    throw Graph6Error("long-form graph6 (order > 62) not supported", base);
  if (first < 63 || first > 125)
    throw Graph6Error("invalid order byte", base);
  const int n = first - 63;
  const int nbits = triangle_bits(n);
  const std::size_t nbytes = (static_cast<std::size_t>(nbits) + 5) / 6;
  if (line.size() < 1 + nbytes)
    throw Graph6Error("truncated graph6 body", base + line.size());
  if (line.size() > 1 + nbytes)
    throw Graph6Error("trailing bytes after graph6 body", base + 1 + nbytes);

  Graph g(n);
  int k = 0;
  for (std::size_t b = 0; b < nbytes; ++b) {
    const unsigned char c = static_cast<unsigned char>(line[1 + b]);
    if (c < 63 || c > 126)
      throw Graph6Error("body byte out of range", base + 1 + b);
    const int value = c - 63;
    for (int s = 5; s >= 0; --s, ++k) {
      const bool bit = (value >> s) & 1;
      if (k >= nbits) {
        if (bit)
          throw Graph6Error("nonzero padding bits", base + 1 + b);
        continue;
      }
      if (bit) {
        // invert column-major pair index
        int j = 1;
        int acc = 0;
        while (acc + j <= k) acc += j, ++j;
        const int i = k - acc;
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  const std::vector<int> verts = g.vertices();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  const int nbits = triangle_bits(n);
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value <<= 1;
      if (g.has_edge(verts[static_cast<std::size_t>(i)],
                     verts[static_cast<std::size_t>(j)]))
        value |= 1;
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (nbits % 6 != 0) {
    value <<= (6 - nbits % 6);
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_complete_minus_edge(int n) {
  if (n < 2)
    throw std::invalid_argument("complete_minus_edge needs n >= 2");
  Graph g = make_complete(n);
  return g.remove_edge(n - 2, n - 1);
}

Graph make_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("gnp needs p in [0,1]");
  Graph g(n);
  std::mt19937_64 rng(seed);
  // Explicit threshold draw instead of bernoulli_distribution so the same
  // seed yields the same graph on every platform.
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const double u =
          static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
      if (u < p) g.add_edge(i, j);
    }
  return g;
}

void for_each_labeled_connected(
    int max_n, const std::function<void(const Graph&)>& fn) {
  if (max_n < 1)
    throw std::invalid_argument("for_each_labeled_connected needs max_n >= 1");
  for (int n = 1; n <= max_n; ++n) {
    const int nbits = triangle_bits(n);
    for (std::uint32_t mask = 0; mask < (1u << nbits); ++mask) {
      Graph g(n);
      int k = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
          if ((mask >> k) & 1) g.add_edge(i, j);
      if (g.is_connected()) fn(g);
    }
  }
}

}  // namespace minorlab
