#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "graph.hpp"

using namespace gssa;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::uniform_real_distribution<>(0, 1)(rng) < p) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("vertex set algebra") {
  VertexSet a{0, 2, 5};
  VertexSet b{2, 3};
  CHECK((a | b) == VertexSet{0, 2, 3, 5});
  CHECK((a & b) == VertexSet{2});
  CHECK((a ^ b) == VertexSet{0, 3, 5});
  CHECK(a.minus(b) == VertexSet{0, 5});
  CHECK(a.complement_in(6) == VertexSet{1, 3, 4});
  CHECK(a.count() == 3);
  CHECK(a.odd_overlap(b));
  CHECK(!a.odd_overlap(VertexSet{2, 5}));
  CHECK(VertexSet{1, 3}.subset_of(VertexSet{0, 1, 3}));
  CHECK(VertexSet{}.empty());
  CHECK(VertexSet::full(3) == VertexSet{0, 1, 2});
}

TEST_CASE("graph construction keeps symmetry and rejects junk") {
  Graph g(4);
  g.add_edge(0, 2);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK(g.degree(0) == 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), invalid_input);
  CHECK_THROWS_AS(g.add_edge(0, 4), invalid_input);
  CHECK_THROWS_AS(Graph(65), invalid_input);
}

TEST_CASE("odd neighbourhood basics") {
  const Graph g = families::path(3);  // 0-1-2
  CHECK(g.odd_neighbourhood(VertexSet{}) == VertexSet{});
  for (int u = 0; u < 3; ++u)
    CHECK(g.odd_neighbourhood(VertexSet::single(u)) == g.neighbours(u));
}

TEST_CASE("odd neighbourhood of a torus diagonal is empty") {
  // Each diagonal vertex has no diagonal neighbours and every other vertex
  // has exactly two, so the odd neighbourhood vanishes. The diagonal still
  // accesses, via D = S itself: D ∪ Odd(D) = D.
  const Graph t = families::torus3x3();
  const VertexSet diag{0, 4, 8};
  CHECK(t.odd_neighbourhood(diag) == VertexSet{});
}

TEST_CASE("odd neighbourhood is GF(2)-linear") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(rng, n);
    const VertexSet k = VertexSet::from_bits(rng() & VertexSet::full(n).bits);
    const VertexSet l = VertexSet::from_bits(rng() & VertexSet::full(n).bits);
    CHECK(g.odd_neighbourhood(k ^ l) ==
          (g.odd_neighbourhood(k) ^ g.odd_neighbourhood(l)));
  }
  // exhaustive on a small graph
  const Graph g = families::cycle(5);
  for (std::uint64_t k = 0; k < 32; ++k)
    for (std::uint64_t l = 0; l < 32; ++l)
      CHECK(g.odd_neighbourhood(VertexSet::from_bits(k ^ l)) ==
            (g.odd_neighbourhood(VertexSet::from_bits(k)) ^ g.odd_neighbourhood(VertexSet::from_bits(l))));
}

TEST_CASE("conjugation toggles inside the set only and is an involution") {
  SUBCASE("empty set is the identity") {
    const Graph g = families::cycle(6);
    CHECK(g.conjugate(VertexSet{}) == g);
  }
  SUBCASE("single edge toggle on a path") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    const Graph c = g.conjugate(VertexSet{0, 1});
    CHECK(!c.adjacent(0, 1));
    CHECK(c.adjacent(1, 2));
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(rng, n);
    const VertexSet a = VertexSet::from_bits(rng() & VertexSet::full(n).bits);
    const Graph c = g.conjugate(a);
    CHECK(c.conjugate(a) == g);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!a.contains(u) || !a.contains(v)) CHECK(c.adjacent(u, v) == g.adjacent(u, v));
  }
}

TEST_CASE("conjugating the torus over V matches the explicit relabeling") {
  const Graph t = families::torus3x3();
  const Graph c = t.conjugate(VertexSet::full(9));
  // Position (i,j) of a fresh torus maps to this original vertex (0-based
  // grid coordinates; id = 3i + j).
  const int relabel[3][3] = {{0, 4, 8}, {7, 2, 3}, {5, 6, 1}};
  auto mapped = [&](int id) { return relabel[id / 3][id % 3]; };
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      CHECK(t.adjacent(u, v) == c.adjacent(mapped(u), mapped(v)));
}

TEST_CASE("family generators") {
  SUBCASE("complete bipartite") {
    const Graph g = families::complete_bipartite(2);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    // bipartite with parts of size n: no intra-side edges, all cross edges
    const Graph k5 = families::complete_bipartite(5);
    for (int u = 0; u < 5; ++u)
      for (int v = 0; v < 5; ++v) {
        if (u != v) {
          CHECK(!k5.adjacent(u, v));
          CHECK(!k5.adjacent(5 + u, 5 + v));
        }
        CHECK(k5.adjacent(u, 5 + v));
      }
  }
  SUBCASE("bipartite minus matching") {
    const Graph g = families::bipartite_minus_matching(2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
  }
  SUBCASE("torus is 4-regular and translation invariant") {
    const Graph t = families::torus3x3();
    CHECK(t.vertex_count() == 9);
    for (int v = 0; v < 9; ++v) CHECK(t.degree(v) == 4);
    for (int di = 0; di < 3; ++di)
      for (int dj = 0; dj < 3; ++dj) {
        auto shift = [&](int id) {
          return 3 * ((id / 3 + di) % 3) + (id % 3 + dj) % 3;
        };
        for (int u = 0; u < 9; ++u)
          for (int v = u + 1; v < 9; ++v)
            CHECK(t.adjacent(u, v) == t.adjacent(shift(u), shift(v)));
      }
  }
  SUBCASE("rejects n = 0") {
    CHECK_THROWS_AS(families::cycle(0), invalid_input);
    CHECK_THROWS_AS(families::complete_bipartite(0), invalid_input);
  }
}

TEST_CASE("protocol JSON round trip and validation") {
  const std::string text =
      R"({"n": 4, "edges": [[0,2],[0,3],[1,2],[1,3]], "encoding": [0,1,2,3]})";
  const Protocol p = protocol_from_json(text);
  CHECK(p.graph.vertex_count() == 4);
  CHECK(p.encoding == VertexSet::full(4));
  const Protocol q = protocol_from_json(protocol_to_json(p));
  CHECK(q.graph == p.graph);
  CHECK(q.encoding == p.encoding);

  CHECK_THROWS_AS(protocol_from_json("not json"), invalid_input);
  CHECK_THROWS_AS(protocol_from_json(R"({"n": 2, "edges": [[1,0]]})"), invalid_input);
  CHECK_THROWS_AS(protocol_from_json(R"({"n": 2, "edges": [[0,1],[0,1]]})"),
                  invalid_input);
  CHECK_THROWS_AS(protocol_from_json(R"({"n": 2, "edges": [[0,2]]})"), invalid_input);
  CHECK_THROWS_AS(protocol_from_json(R"({"n": 0, "edges": []})"), invalid_input);
}
