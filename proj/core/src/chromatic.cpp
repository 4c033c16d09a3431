#include "minorlab/chromatic.hpp"

#include <algorithm>
#include <stdexcept>

#include "minorlab/clique.hpp"

namespace minorlab {

namespace {

std::vector<VertexSet> adjacency_rows(const Graph& g) {
  std::vector<VertexSet> rows(static_cast<std::size_t>(g.capacity()), 0);
  for_each_vertex(g.live_mask(),
                  [&](int v) { rows[static_cast<std::size_t>(v)] = g.neighbors(v); });
  return rows;
}

// Vertices in degree-descending order (label ascending on ties); putting
// constrained vertices first keeps the search tree shallow.
std::vector<int> branch_order(const Graph& g) {
  std::vector<int> verts = g.vertices();
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  return verts;
}

int greedy_upper_bound(const Graph& g, const std::vector<int>& order) {
  std::vector<int> color(static_cast<std::size_t>(g.capacity()), -1);
  int used = 0;
  for (int v : order) {
    VertexSet taken = 0;
    for_each_vertex(g.neighbors(v), [&](int u) {
      const int c = color[static_cast<std::size_t>(u)];
      if (c >= 0) taken |= VertexSet{1} << c;
    });
    int c = 0;
    while (vcontains(taken, c)) ++c;
    color[static_cast<std::size_t>(v)] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

// Can g be properly coloured with exactly <= k colours?  New colour indices
// are introduced in order, so each colour-class partition is visited once.
bool colorable(const Graph& g, const std::vector<int>& order, int k,
               std::vector<int>& color_out) {
  std::vector<int> color(static_cast<std::size_t>(g.capacity()), -1);
  const std::size_t n = order.size();
  // Iterative DFS over (position, next colour to try).
  std::vector<int> next(n + 1, 0);
  std::vector<int> used(n + 1, 0);
  std::size_t pos = 0;
  while (true) {
    if (pos == n) {
      color_out = color;
      return true;
    }
    const int v = order[pos];
    const int limit = std::min(used[pos] + 1, k);
    int c = next[pos];
    bool advanced = false;
    for (; c < limit; ++c) {
      bool clash = false;
      for_each_vertex(g.neighbors(v), [&](int u) {
        if (color[static_cast<std::size_t>(u)] == c) clash = true;
      });
      if (!clash) {
        color[static_cast<std::size_t>(v)] = c;
        next[pos] = c + 1;
        used[pos + 1] = std::max(used[pos], c + 1);
        ++pos;
        next[pos] = 0;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    if (pos == 0) return false;
    --pos;
    color[static_cast<std::size_t>(order[pos])] = -1;
  }
}

void check_budget(const Graph& g, int max_order, const char* who) {
  if (g.order() > max_order)
    throw BudgetExceeded(std::string(who) + " order budget exceeded",
                         g.order(), max_order);
}

PartiteRepresentation parts_from_coloring(const Graph& g,
                                          const std::vector<int>& color,
                                          int k) {
  PartiteRepresentation rep;
  rep.parts.assign(static_cast<std::size_t>(k), 0);
  for_each_vertex(g.live_mask(), [&](int v) {
    rep.parts[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] |=
        vbit(v);
  });
  std::sort(rep.parts.begin(), rep.parts.end(), [](VertexSet a, VertexSet b) {
    return vlowest(a) < vlowest(b);
  });
  return rep;
}

bool independent(const Graph& g, VertexSet part) {
  bool ok = true;
  for_each_vertex(part, [&](int v) {
    if (g.neighbors(v) & part) ok = false;
  });
  return ok;
}

}  // namespace

bool is_valid_partition(const Graph& g, const PartiteRepresentation& rep) {
  VertexSet seen = 0;
  for (VertexSet part : rep.parts) {
    if (part == 0) return false;
    if (part & seen) return false;
    if (part & ~g.live_mask()) return false;
    if (!independent(g, part)) return false;
    seen |= part;
  }
  return seen == g.live_mask();
}

int chromatic_number(const Graph& g, int max_order) {
  check_budget(g, max_order, "chromatic_number");
  if (g.order() == 0) return 0;
  const std::vector<int> order = branch_order(g);
  const int ub = greedy_upper_bound(g, order);
  const int lb = max_clique_size(adjacency_rows(g), g.live_mask());
  std::vector<int> scratch;
  for (int k = lb; k < ub; ++k)
    if (colorable(g, order, k, scratch)) return k;
  return ub;
}

PartiteRepresentation minimal_partite_representation(const Graph& g,
                                                     int max_order) {
  check_budget(g, max_order, "minimal_partite_representation");
  if (g.order() == 0) return {};
  const int k = chromatic_number(g, max_order);
  const std::vector<int> order = branch_order(g);
  std::vector<int> color;
  if (!colorable(g, order, k, color))
    throw std::logic_error("chromatic number not realizable");  // unreachable
  return parts_from_coloring(g, color, k);
}

std::vector<PartiteRepresentation> all_minimal_representations(const Graph& g,
                                                               int max_order) {
  check_budget(g, max_order, "all_minimal_representations");
  std::vector<PartiteRepresentation> out;
  if (g.order() == 0) return out;
  const int k = chromatic_number(g, max_order);
  const std::vector<int> verts = g.vertices();  // label order: RGS canonical
  std::vector<int> color(static_cast<std::size_t>(g.capacity()), -1);

  // Restricted-growth enumeration: colour c may appear at a vertex only if
  // colours 0..c-1 already appear earlier, so every partition into k
  // independent classes is produced exactly once.
  auto rec = [&](auto&& self, std::size_t pos, int used) -> void {
    if (pos == verts.size()) {
      if (used == k) out.push_back(parts_from_coloring(g, color, k));
      return;
    }
    // Not enough vertices left to open all k classes?
    if (used + static_cast<int>(verts.size() - pos) < k) return;
    const int v = verts[pos];
    const int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for_each_vertex(g.neighbors(v), [&](int u) {
        if (color[static_cast<std::size_t>(u)] == c) clash = true;
      });
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      self(self, pos + 1, std::max(used, c + 1));
      color[static_cast<std::size_t>(v)] = -1;
    }
  };
  rec(rec, 0, 0);
  return out;
}

bool is_essentially_singleton(const Graph& g, const PartiteRepresentation& rep,
                              int part_index) {
  if (part_index < 0 ||
      part_index >= static_cast<int>(rep.parts.size()))
    throw std::invalid_argument("is_essentially_singleton: bad part index");
  const VertexSet part = rep.parts[static_cast<std::size_t>(part_index)];
  if (vcount(part) <= 1)
    throw std::invalid_argument(
        "is_essentially_singleton: undefined for parts with one element");
  for (std::size_t b = 0; b < rep.parts.size(); ++b) {
    if (static_cast<int>(b) == part_index) continue;
    const VertexSet target = rep.parts[b];
    bool found = false;
    for_each_vertex(part, [&](int kept) {
      const VertexSet moved = part & ~vbit(kept);
      if (independent(g, target | moved)) found = true;
    });
    if (found) return true;
  }
  return false;
}

std::vector<SeparatorPair> find_separators(const Graph& g,
                                           const PartiteRepresentation& rep) {
  std::vector<SeparatorPair> out;
  for (VertexSet part : rep.parts) {
    const std::vector<int> members = [&] {
      std::vector<int> m;
      for_each_vertex(part, [&](int v) { m.push_back(v); });
      return m;
    }();
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const VertexSet common =
            g.neighbors(members[a]) & g.neighbors(members[b]);
        if (common)
          out.push_back({members[a], members[b], vlowest(common)});
      }
  }
  return out;
}

bool is_contraction_sensitive(const Graph& g, int max_order) {
  check_budget(g, max_order, "is_contraction_sensitive");
  if (!g.is_connected())
    throw std::invalid_argument("is_contraction_sensitive: graph disconnected");
  if (g.size() == 0)
    throw std::invalid_argument("is_contraction_sensitive: graph edgeless");
  const int chi = chromatic_number(g, max_order);
  const std::vector<int> verts = g.vertices();
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (!g.has_edge(verts[a], verts[b])) continue;
      // Orientation irrelevant: both directions give the same graph up to
      // the surviving label.
      if (chromatic_number(g.contract_edge(verts[b], verts[a]), max_order) >=
          chi)
        return false;
    }
  return true;
}

Criticality criticality(const Graph& g, int max_order) {
  check_budget(g, max_order, "criticality");
  const int chi = chromatic_number(g, max_order);
  Criticality result{true, true};
  const std::vector<int> verts = g.vertices();
  for (std::size_t a = 0; a < verts.size() && result.edge_critical; ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (!g.has_edge(verts[a], verts[b])) continue;
      if (chromatic_number(g.remove_edge(verts[a], verts[b]), max_order) >=
          chi) {
        result.edge_critical = false;
        break;
      }
    }
  for (int v : verts) {
    if (chromatic_number(g.remove_vertex(v), max_order) >= chi) {
      result.vertex_critical = false;
      break;
    }
  }
  return result;
}

}  // namespace minorlab
