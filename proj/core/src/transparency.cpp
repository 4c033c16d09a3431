#include "minorlab/transparency.hpp"

#include <algorithm>
#include <stdexcept>

#include "minorlab/clique.hpp"

namespace minorlab {

namespace {
constexpr int kExactQueryCap = 20;
}

TransparencyMatrix TransparencyMatrix::compute(const Graph& g) {
  TransparencyMatrix t;
  t.capacity_ = g.capacity();
  t.live_ = g.live_mask();
  t.cells_.assign(
      static_cast<std::size_t>(t.capacity_) * static_cast<std::size_t>(t.capacity_),
      Dist::unreachable());
  for_each_vertex(t.live_, [&](int src) {
    t.cells_[t.idx(src, src)] = Dist::finite(0);
    VertexSet seen = vbit(src);
    VertexSet frontier = seen;
    int hops = 0;
    while (frontier) {
      ++hops;
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      next &= ~seen;
      for_each_vertex(next, [&](int v) {
        t.cells_[t.idx(src, v)] = Dist::finite(hops);
      });
      seen |= next;
      frontier = next;
    }
  });
  return t;
}

void TransparencyMatrix::check_live(int v, const char* who) const {
  if (v < 0 || v >= capacity_ || !vcontains(live_, v))
    throw std::invalid_argument(std::string(who) + ": vertex " +
                                std::to_string(v) + " is not live");
}

std::vector<int> TransparencyMatrix::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(order()));
  for_each_vertex(live_, [&](int v) { out.push_back(v); });
  return out;
}

Dist TransparencyMatrix::at(int m, int n) const {
  check_live(m, "at");
  check_live(n, "at");
  return cells_[idx(m, n)];
}

void TransparencyMatrix::set(int m, int n, Dist d) {
  check_live(m, "set");
  check_live(n, "set");
  cells_[idx(m, n)] = d;
  cells_[idx(n, m)] = d;
}

void TransparencyMatrix::kill(int v) {
  check_live(v, "kill");
  live_ &= ~vbit(v);
}

bool TransparencyMatrix::is_complete() const {
  bool ok = true;
  for_each_vertex(live_, [&](int m) {
    for_each_vertex(live_, [&](int n) {
      if (m != n && cells_[idx(m, n)] != Dist::finite(1)) ok = false;
    });
  });
  return ok;
}

std::vector<VertexSet> TransparencyMatrix::threshold_to_adjacency() const {
  std::vector<VertexSet> rows(static_cast<std::size_t>(capacity_), 0);
  for_each_vertex(live_, [&](int m) {
    for_each_vertex(live_, [&](int n) {
      if (cells_[idx(m, n)] == Dist::finite(1))
        rows[static_cast<std::size_t>(m)] |= vbit(n);
    });
  });
  return rows;
}

int TransparencyMatrix::degree_of(int v) const {
  check_live(v, "degree_of");
  int units = 0;
  for_each_vertex(live_, [&](int n) {
    if (cells_[idx(v, n)] == Dist::finite(1)) ++units;
  });
  return units;
}

int TransparencyMatrix::clique_number() const {
  if (order() > kExactQueryCap)
    throw BudgetExceeded("clique_number order budget exceeded", order(),
                         kExactQueryCap);
  return max_clique_size(threshold_to_adjacency(), live_);
}

int TransparencyMatrix::independence_number() const {
  if (order() > kExactQueryCap)
    throw BudgetExceeded("independence_number order budget exceeded", order(),
                         kExactQueryCap);
  // Pairs farther than one hop apart (unreachable included) are compatible;
  // a largest clique of the compatibility relation is a largest independent
  // set of the underlying graph.
  std::vector<VertexSet> compat(static_cast<std::size_t>(capacity_), 0);
  for_each_vertex(live_, [&](int m) {
    for_each_vertex(live_, [&](int n) {
      if (m != n && !(cells_[idx(m, n)] == Dist::finite(1)))
        compat[static_cast<std::size_t>(m)] |= vbit(n);
    });
  });
  return max_clique_size(compat, live_);
}

std::string TransparencyMatrix::dump() const {
  const std::vector<int> verts = vertices();
  std::size_t width = 1;
  for (int m : verts)
    for (int n : verts)
      width = std::max(width, cells_[idx(m, n)].str().size());
  std::string out;
  for (int m : verts) {
    bool first = true;
    for (int n : verts) {
      if (!first) out.push_back(' ');
      first = false;
      const std::string cell = cells_[idx(m, n)].str();
      out.append(width - cell.size(), ' ');
      out.append(cell);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace minorlab
