#pragma once

#include <bit>
#include <cstdint>

namespace minorlab {

// Vertex sets are bitmasks over vertex labels 0..61.  Everything in this
// library stays below 62 vertices (the graph6 short form bound), so one
// 64-bit word is always enough.
using VertexSet = std::uint64_t;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr bool vcontains(VertexSet s, int v) { return (s >> v) & 1; }

constexpr int vcount(VertexSet s) { return std::popcount(s); }

constexpr int vlowest(VertexSet s) { return std::countr_zero(s); }

template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

}  // namespace minorlab
