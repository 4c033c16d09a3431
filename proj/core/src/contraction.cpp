#include "minorlab/contraction.hpp"

#include <stdexcept>

namespace minorlab {

namespace {

void check_contractible(const TransparencyMatrix& t, const Graph& g,
                        int removed, int survivor) {
  if (!g.is_live(removed) || !g.is_live(survivor))
    throw std::invalid_argument("update: vertex is not live");
  if (removed == survivor)
    throw std::invalid_argument("update: identical endpoints");
  if (!g.has_edge(removed, survivor))
    throw std::invalid_argument("update: pair not available for contraction");
  if (t.live_mask() != g.live_mask())
    throw std::invalid_argument("update: matrix does not match graph");
}

}  // namespace

TransparencyMatrix update_exact(const TransparencyMatrix& t, const Graph& g,
                                int removed, int survivor) {
  check_contractible(t, g, removed, survivor);
  TransparencyMatrix out = t;
  const std::vector<int> verts = t.vertices();
  for (std::size_t a = 0; a < verts.size(); ++a) {
    const int m = verts[a];
    if (m == removed) continue;
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      const int n = verts[b];
      if (n == removed) continue;
      const Dist via = Dist::min(t.at(m, removed), t.at(m, survivor)) +
                       Dist::min(t.at(removed, n), t.at(survivor, n));
      out.set(m, n, Dist::min(t.at(m, n), via));
    }
  }
  out.kill(removed);
  return out;
}

TransparencyMatrix update_paper_literal(const TransparencyMatrix& t,
                                        int removed, int survivor) {
  if (removed == survivor)
    throw std::invalid_argument("update: identical endpoints");
  if (t.at(removed, survivor) != Dist::finite(1))
    throw std::invalid_argument("update: pair not available for contraction");

  // Collect rule (4) decrements against the pre-update entries.
  std::vector<std::pair<int, int>> drops;
  const std::vector<int> verts = t.vertices();
  for (std::size_t a = 0; a < verts.size(); ++a) {
    const int m = verts[a];
    if (m == removed || m == survivor) continue;
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      const int n = verts[b];
      if (n == removed || n == survivor) continue;
      if (uses_edge_condition(t, m, n, removed, survivor))
        drops.emplace_back(m, n);
    }
  }

  TransparencyMatrix out = t;
  // Rules (1) and (2): survivor row/column becomes the pointwise minimum.
  for (int k : verts) {
    if (k == removed || k == survivor) continue;
    out.set(survivor, k, Dist::min(t.at(removed, k), t.at(survivor, k)));
  }
  // Rule (3).
  out.kill(removed);
  // Rule (4).
  for (auto [m, n] : drops) out.set(m, n, out.at(m, n).minus_one());
  // Rule (5): everything else untouched.
  return out;
}

bool uses_edge_condition(const TransparencyMatrix& t, int m, int n, int i,
                         int j) {
  return t.at(m, n) == t.at(m, i) + t.at(j, n) + Dist::finite(1);
}

int replacement_count(const TransparencyMatrix& t, const Graph& g,
                      int removed, int survivor) {
  const TransparencyMatrix after = update_exact(t, g, removed, survivor);
  int count = 0;
  const std::vector<int> verts = after.vertices();
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      const int m = verts[a];
      const int n = verts[b];
      if (after.at(m, n) == Dist::finite(1) && t.at(m, n) > Dist::finite(1))
        ++count;
    }
  return count;
}

std::vector<std::pair<int, int>> divergence_positions(
    const TransparencyMatrix& t, const Graph& g, int removed, int survivor) {
  const TransparencyMatrix exact = update_exact(t, g, removed, survivor);
  const TransparencyMatrix literal = update_paper_literal(t, removed, survivor);
  std::vector<std::pair<int, int>> out;
  const std::vector<int> verts = exact.vertices();
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      const int m = verts[a];
      const int n = verts[b];
      if (exact.at(m, n) != literal.at(m, n)) out.emplace_back(m, n);
    }
  return out;
}

}  // namespace minorlab
