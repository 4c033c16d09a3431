// Independent reference implementations used to cross-check the library.
// Everything here is deliberately naive and shares no code with the
// implementations under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "minorlab/graph.hpp"

namespace oracle {

// Plain adjacency-matrix decode of a graph6 short-form line, bit by bit.
inline std::vector<std::vector<bool>> parse_graph6(const std::string& line) {
  const int n = line.at(0) - 63;
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  std::vector<int> bits;
  for (std::size_t b = 1; b < line.size(); ++b) {
    const int value = line[b] - 63;
    for (int s = 5; s >= 0; --s) bits.push_back((value >> s) & 1);
  }
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bits.at(k)) adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
  return adj;
}

// All-pairs hop counts by repeated relaxation until a fixed point; -1 marks
// unreachable.  Indexed by the graph's live labels via a dense map.
inline std::vector<std::vector<int>> apsp(const minorlab::Graph& g) {
  const std::vector<int> verts = g.vertices();
  const std::size_t n = verts.size();
  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t a = 0; a < n; ++a) {
    d[a][a] = 0;
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && g.has_edge(verts[a], verts[b])) d[a][b] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (d[a][c] + d[c][b] < d[a][b]) {
            d[a][b] = d[a][c] + d[c][b];
            changed = true;
          }
  }
  for (auto& row : d)
    for (int& x : row)
      if (x >= kInf) x = -1;
  return d;
}

inline bool subset_is_clique(const minorlab::Graph& g,
                             const std::vector<int>& verts,
                             unsigned mask) {
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if ((mask >> a & 1) && (mask >> b & 1) &&
          !g.has_edge(verts[a], verts[b]))
        return false;
  return true;
}

inline int max_clique(const minorlab::Graph& g) {
  const std::vector<int> verts = g.vertices();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << verts.size()); ++mask)
    if (subset_is_clique(g, verts, mask))
      best = std::max(best, std::popcount(mask));
  return best;
}

inline int max_independent(const minorlab::Graph& g) {
  const std::vector<int> verts = g.vertices();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << verts.size()); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < verts.size() && ok; ++a)
      for (std::size_t b = a + 1; b < verts.size() && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) &&
            g.has_edge(verts[a], verts[b]))
          ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Smallest k admitting a proper colouring, by trying every assignment.
inline bool colorable_brute(const minorlab::Graph& g,
                            const std::vector<int>& verts,
                            std::vector<int>& color, std::size_t pos, int k) {
  if (pos == verts.size()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (std::size_t q = 0; q < pos; ++q)
      if (color[q] == c && g.has_edge(verts[q], verts[pos])) ok = false;
    if (!ok) continue;
    color[pos] = c;
    if (colorable_brute(g, verts, color, pos + 1, k)) return true;
  }
  return false;
}

inline int chromatic(const minorlab::Graph& g) {
  if (g.order() == 0) return 0;
  const std::vector<int> verts = g.vertices();
  for (int k = 1;; ++k) {
    std::vector<int> color(verts.size(), -1);
    if (colorable_brute(g, verts, color, 0, k)) return k;
  }
}

// Every partition of the vertex set into exactly k independent classes,
// canonicalized as a sorted list of sorted parts.
inline std::set<std::vector<std::vector<int>>> all_partitions_into(
    const minorlab::Graph& g, int k) {
  const std::vector<int> verts = g.vertices();
  std::set<std::vector<std::vector<int>>> found;
  std::vector<int> color(verts.size(), 0);
  const std::size_t n = verts.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(k);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      color[i] = static_cast<int>(c % static_cast<std::uint64_t>(k));
      c /= static_cast<std::uint64_t>(k);
    }
    bool proper = true;
    for (std::size_t a = 0; a < n && proper; ++a)
      for (std::size_t b = a + 1; b < n && proper; ++b)
        if (color[a] == color[b] && g.has_edge(verts[a], verts[b]))
          proper = false;
    if (!proper) continue;
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < n; ++i)
      parts[static_cast<std::size_t>(color[i])].push_back(verts[i]);
    if (std::any_of(parts.begin(), parts.end(),
                    [](const auto& p) { return p.empty(); }))
      continue;
    std::sort(parts.begin(), parts.end());
    found.insert(parts);
  }
  return found;
}

// Largest complete minor by brute force: every partition of every subset
// into classes (restricted-growth enumeration), then a from-scratch
// connectivity and pairwise-adjacency check.
inline bool subset_connected(const minorlab::Graph& g,
                             const std::vector<int>& members) {
  if (members.empty()) return false;
  std::set<int> seen{members[0]};
  std::vector<int> stack{members[0]};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : members)
      if (!seen.count(u) && g.has_edge(v, u)) {
        seen.insert(u);
        stack.push_back(u);
      }
  }
  return seen.size() == members.size();
}

inline bool blocks_adjacent(const minorlab::Graph& g,
                            const std::vector<int>& a,
                            const std::vector<int>& b) {
  for (int u : a)
    for (int v : b)
      if (g.has_edge(u, v)) return true;
  return false;
}

inline void hadwiger_rec(const minorlab::Graph& g,
                         const std::vector<int>& verts, std::size_t pos,
                         std::vector<std::vector<int>>& blocks, int& best) {
  if (pos == verts.size()) {
    for (const auto& block : blocks)
      if (!subset_connected(g, block)) return;
    for (std::size_t a = 0; a < blocks.size(); ++a)
      for (std::size_t b = a + 1; b < blocks.size(); ++b)
        if (!blocks_adjacent(g, blocks[a], blocks[b])) return;
    best = std::max(best, static_cast<int>(blocks.size()));
    return;
  }
  hadwiger_rec(g, verts, pos + 1, blocks, best);  // leave out
  for (auto& block : blocks) {
    block.push_back(verts[pos]);
    hadwiger_rec(g, verts, pos + 1, blocks, best);
    block.pop_back();
  }
  blocks.push_back({verts[pos]});
  hadwiger_rec(g, verts, pos + 1, blocks, best);
  blocks.pop_back();
}

inline int hadwiger(const minorlab::Graph& g) {
  std::vector<std::vector<int>> blocks;
  int best = 0;
  hadwiger_rec(g, g.vertices(), 0, blocks, best);
  return best;
}

// Connected labelled graph counts, independently of the enumerator, via
// the classic recurrence over the component containing the first vertex.
inline std::uint64_t connected_count(int n) {
  std::vector<std::uint64_t> total(static_cast<std::size_t>(n) + 1),
      conn(static_cast<std::size_t>(n) + 1);
  auto choose = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 0; i < b; ++i) r = r * static_cast<std::uint64_t>(a - i) /
                                     static_cast<std::uint64_t>(i + 1);
    return r;
  };
  for (int m = 0; m <= n; ++m)
    total[static_cast<std::size_t>(m)] = std::uint64_t{1}
                                         << (m * (m - 1) / 2);
  conn[0] = 0;
  for (int m = 1; m <= n; ++m) {
    std::uint64_t sum = 0;
    for (int k = 1; k < m; ++k)
      sum += choose(m - 1, k - 1) * conn[static_cast<std::size_t>(k)] *
             total[static_cast<std::size_t>(m - k)];
    conn[static_cast<std::size_t>(m)] =
        total[static_cast<std::size_t>(m)] - sum;
  }
  return conn[static_cast<std::size_t>(n)];
}

// Deterministic pseudo-random helpers for test corpora.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline minorlab::Graph random_connected(std::mt19937_64& rng, int max_n) {
  while (true) {
    const int n = uniform_int(rng, 2, max_n);
    const double p = 0.2 + 0.7 * (static_cast<double>(rng() >> 11) *
                                  (1.0 / 9007199254740992.0));
    const minorlab::Graph g = minorlab::make_gnp(n, p, rng());
    if (g.is_connected()) return g;
  }
}

// Uniform random labelled tree by random attachment.
inline minorlab::Graph random_tree(std::mt19937_64& rng, int n) {
  minorlab::Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, uniform_int(rng, 0, v - 1));
  return g;
}

}  // namespace oracle
