#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "minorlab/chromatic.hpp"
#include "oracles.hpp"

using minorlab::Graph;
using minorlab::PartiteRepresentation;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

std::vector<std::vector<int>> rep_as_lists(const PartiteRepresentation& rep) {
  std::vector<std::vector<int>> out;
  for (minorlab::VertexSet part : rep.parts) {
    std::vector<int> one;
    minorlab::for_each_vertex(part, [&](int v) { one.push_back(v); });
    out.push_back(one);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("chromatic number on fixed families") {
  for (int n = 1; n <= 6; ++n)
    CHECK(minorlab::chromatic_number(minorlab::make_complete(n)) == n);
  CHECK(minorlab::chromatic_number(minorlab::make_cycle(4)) == 2);
  CHECK(minorlab::chromatic_number(minorlab::make_cycle(5)) == 3);
  CHECK(minorlab::chromatic_number(minorlab::make_cycle(6)) == 2);
  CHECK(minorlab::chromatic_number(minorlab::make_complete_minus_edge(4)) == 3);
  CHECK(minorlab::chromatic_number(complete_bipartite(3, 3)) == 2);
  CHECK(minorlab::chromatic_number(minorlab::make_petersen()) == 3);
  CHECK(minorlab::chromatic_number(Graph(0)) == 0);
  CHECK(minorlab::chromatic_number(Graph(3)) == 1);
}

TEST_CASE("chromatic number matches brute force") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = oracle::uniform_int(rng, 1, 7);
    const Graph g = minorlab::make_gnp(n, 0.5, rng());
    CHECK(minorlab::chromatic_number(g) == oracle::chromatic(g));
  }
}

TEST_CASE("colouring budget refusal") {
  const Graph g = minorlab::make_gnp(17, 0.4, 5);
  CHECK_THROWS_AS(minorlab::chromatic_number(g), minorlab::BudgetExceeded);
  CHECK(minorlab::chromatic_number(g, 17) >= 1);
}

TEST_CASE("minimal representation is a valid optimal partition") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected(rng, 9);
    const PartiteRepresentation rep =
        minorlab::minimal_partite_representation(g);
    CHECK(is_valid_partition(g, rep));
    CHECK(static_cast<int>(rep.parts.size()) ==
          minorlab::chromatic_number(g));
    // Parts arrive sorted by their lowest member.
    for (std::size_t i = 1; i < rep.parts.size(); ++i)
      CHECK(minorlab::vlowest(rep.parts[i - 1]) <
            minorlab::vlowest(rep.parts[i]));
  }
}

TEST_CASE("partition validation rejects bad inputs") {
  const Graph c4 = minorlab::make_cycle(4);
  PartiteRepresentation good{{minorlab::vbit(0) | minorlab::vbit(2),
                              minorlab::vbit(1) | minorlab::vbit(3)}};
  CHECK(is_valid_partition(c4, good));
  PartiteRepresentation adjacent{{minorlab::vbit(0) | minorlab::vbit(1),
                                  minorlab::vbit(2) | minorlab::vbit(3)}};
  CHECK(!is_valid_partition(c4, adjacent));
  PartiteRepresentation missing{{minorlab::vbit(0) | minorlab::vbit(2),
                                 minorlab::vbit(1)}};
  CHECK(!is_valid_partition(c4, missing));
  PartiteRepresentation overlapping{
      {minorlab::vbit(0) | minorlab::vbit(2),
       minorlab::vbit(1) | minorlab::vbit(3), minorlab::vbit(0)}};
  CHECK(!is_valid_partition(c4, overlapping));
  PartiteRepresentation empty_part{{minorlab::vbit(0) | minorlab::vbit(2),
                                    minorlab::vbit(1) | minorlab::vbit(3), 0}};
  CHECK(!is_valid_partition(c4, empty_part));
}

TEST_CASE("all five optimal partitions of the five-cycle") {
  const Graph c5 = minorlab::make_cycle(5);
  const auto reps = minorlab::all_minimal_representations(c5);
  REQUIRE(reps.size() == 5);
  std::set<std::vector<std::vector<int>>> seen;
  for (const PartiteRepresentation& rep : reps) {
    CHECK(is_valid_partition(c5, rep));
    CHECK(rep.parts.size() == 3);
    seen.insert(rep_as_lists(rep));
  }
  CHECK(seen.size() == 5);  // no duplicates
  CHECK(seen.count({{0}, {1, 3}, {2, 4}}) == 1);
}

TEST_CASE("representation enumeration matches brute force") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = oracle::uniform_int(rng, 2, 6);
    const Graph g = minorlab::make_gnp(n, 0.5, rng());
    const int k = minorlab::chromatic_number(g);
    const auto reps = minorlab::all_minimal_representations(g);
    const auto expected = oracle::all_partitions_into(g, k);
    CHECK(reps.size() == expected.size());
    for (const PartiteRepresentation& rep : reps)
      CHECK(expected.count(rep_as_lists(rep)) == 1);
  }
  CHECK_THROWS_AS(
      minorlab::all_minimal_representations(minorlab::make_gnp(9, 0.5, 1)),
      minorlab::BudgetExceeded);
}

TEST_CASE("essentially singleton parts") {
  const Graph c5 = minorlab::make_cycle(5);
  PartiteRepresentation rep{{minorlab::vbit(0),
                             minorlab::vbit(1) | minorlab::vbit(3),
                             minorlab::vbit(2) | minorlab::vbit(4)}};
  REQUIRE(is_valid_partition(c5, rep));
  // {1,3} can send 3 next to the lone 0; {2,4} can send 2 there.
  CHECK(minorlab::is_essentially_singleton(c5, rep, 1));
  CHECK(minorlab::is_essentially_singleton(c5, rep, 2));
  CHECK_THROWS_AS(minorlab::is_essentially_singleton(c5, rep, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(minorlab::is_essentially_singleton(c5, rep, 3),
                  std::invalid_argument);

  // In K4 minus the edge (2,3) the pair {2,3} has nowhere to donate: both
  // other parts are adjacent hubs.
  const Graph k4e = minorlab::make_complete_minus_edge(4);
  PartiteRepresentation rep2{{minorlab::vbit(0), minorlab::vbit(1),
                              minorlab::vbit(2) | minorlab::vbit(3)}};
  REQUIRE(is_valid_partition(k4e, rep2));
  CHECK(!minorlab::is_essentially_singleton(k4e, rep2, 2));

  // Independent pair far from a singleton it could join.
  const Graph p5 = path(5);
  PartiteRepresentation rep3{{minorlab::vbit(0) | minorlab::vbit(2) |
                                  minorlab::vbit(4),
                              minorlab::vbit(1) | minorlab::vbit(3)}};
  REQUIRE(is_valid_partition(p5, rep3));
  // {0,2,4} minus 0 is {2,4}; {1,3} with 2 and 4 added is not independent,
  // and the same failure repeats for every kept element, so: false.
  CHECK(!minorlab::is_essentially_singleton(p5, rep3, 0));
  // {1,3} can donate 1 towards {0,2,4}? 1 is adjacent to 0 and 2: no.
  // Donate 3? adjacent to 2 and 4: no. Hence false.
  CHECK(!minorlab::is_essentially_singleton(p5, rep3, 1));
}

TEST_CASE("separator pairs sit at distance two inside a part") {
  const Graph c5 = minorlab::make_cycle(5);
  PartiteRepresentation rep{{minorlab::vbit(0),
                             minorlab::vbit(1) | minorlab::vbit(3),
                             minorlab::vbit(2) | minorlab::vbit(4)}};
  const auto seps = minorlab::find_separators(c5, rep);
  REQUIRE(seps.size() == 2);
  CHECK(seps[0] == minorlab::SeparatorPair{1, 3, 2});
  CHECK(seps[1] == minorlab::SeparatorPair{2, 4, 3});

  const Graph p3 = path(3);
  const auto rep3 = minorlab::minimal_partite_representation(p3);
  const auto seps3 = minorlab::find_separators(p3, rep3);
  REQUIRE(seps3.size() == 1);
  CHECK(seps3[0] == minorlab::SeparatorPair{0, 2, 1});

  // No multi-vertex parts, no separators.
  CHECK(minorlab::find_separators(
            minorlab::make_complete(4),
            minorlab::minimal_partite_representation(minorlab::make_complete(4)))
            .empty());
}

TEST_CASE("contraction sensitivity") {
  CHECK(minorlab::is_contraction_sensitive(minorlab::make_cycle(5)));
  CHECK(minorlab::is_contraction_sensitive(minorlab::make_complete(2)));
  CHECK(minorlab::is_contraction_sensitive(minorlab::make_complete(5)));
  CHECK(!minorlab::is_contraction_sensitive(minorlab::make_cycle(4)));
  CHECK(!minorlab::is_contraction_sensitive(
      minorlab::make_complete_minus_edge(4)));
  CHECK(!minorlab::is_contraction_sensitive(path(4)));

  CHECK_THROWS_AS(minorlab::is_contraction_sensitive(Graph(3)),
                  std::invalid_argument);  // edgeless
  Graph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  CHECK_THROWS_AS(minorlab::is_contraction_sensitive(two_edges),
                  std::invalid_argument);  // disconnected
}

TEST_CASE("edge and vertex criticality") {
  const auto c5 = minorlab::criticality(minorlab::make_cycle(5));
  CHECK(c5.edge_critical);
  CHECK(c5.vertex_critical);
  CHECK(minorlab::is_k_critical(minorlab::make_cycle(5)));
  CHECK(minorlab::is_k_critical(minorlab::make_complete(4)));

  const auto c6 = minorlab::criticality(minorlab::make_cycle(6));
  CHECK(!c6.edge_critical);
  CHECK(!c6.vertex_critical);

  const auto k4e = minorlab::criticality(minorlab::make_complete_minus_edge(4));
  CHECK(!k4e.edge_critical);
  CHECK(!k4e.vertex_critical);

  const auto pet = minorlab::criticality(minorlab::make_petersen());
  CHECK(!pet.edge_critical);
  CHECK(!pet.vertex_critical);

  // Odd cycle plus a pendant vertex: edge-critical fails at the pendant
  // edge, vertex-critical fails at the pendant vertex.
  Graph tadpole(6);
  for (int v = 0; v < 5; ++v) tadpole.add_edge(v, (v + 1) % 5);
  tadpole.add_edge(0, 5);
  const auto tad = minorlab::criticality(tadpole);
  CHECK(!tad.edge_critical);
  CHECK(!tad.vertex_critical);
}
