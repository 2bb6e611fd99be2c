#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "sweep.hpp"

using namespace gssa;

namespace {

Protocol all_encoding(Graph g) {
  const int n = g.vertex_count();
  return {std::move(g), VertexSet::full(n)};
}

std::vector<VertexSet> sorted_sets(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end(), [](VertexSet a, VertexSet b) {
    return a.count() != b.count() ? a.count() < b.count() : a.bits < b.bits;
  });
  return v;
}

}  // namespace

TEST_CASE("theorem 1 witness: K22 with one side plus a partner") {
  const Protocol p = all_encoding(families::complete_bipartite(2));
  const auto d = theorem1_witness(p, VertexSet{0, 2, 3});
  REQUIRE(d.has_value());
  CHECK(*d == VertexSet{0});  // D = {u1}, Odd(D) = {v1,v2}
}

TEST_CASE("theorem 1 witness: torus diagonal certifies itself") {
  const Protocol p = all_encoding(families::torus3x3());
  const VertexSet diag{0, 4, 8};
  const auto d = theorem1_witness(p, diag);
  REQUIRE(d.has_value());
  CHECK(*d == diag);
  CHECK(p.graph.odd_neighbourhood(*d) == VertexSet{});
}

TEST_CASE("theorem 1 witness: the full player set always has a singleton witness") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    Protocol p{oracle::random_graph(rng, n), VertexSet{}};
    p.encoding.add(static_cast<int>(rng() % n));
    p.encoding.add(static_cast<int>(rng() % n));
    const auto d = theorem1_witness(p, VertexSet::full(n));
    REQUIRE(d.has_value());
    CHECK(*d == VertexSet::single(p.encoding.lowest()));
  }
}

TEST_CASE("theorem 1 witness agrees with brute force on C5 windows") {
  const Protocol p = all_encoding(families::cycle(5));
  for (int start = 0; start < 5; ++start) {
    VertexSet s;
    for (int i = 0; i < 3; ++i) s.add((start + i) % 5);
    const auto fast = theorem1_witness(p, s);
    const auto slow = oracle::t1_brute(p, s);
    CHECK(fast.has_value() == slow.has_value());
    CHECK(fast.has_value());
  }
}

TEST_CASE("theorem 2 witness: complement of the encoding blocks via K = {}") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    Protocol p{oracle::random_graph(rng, n), VertexSet{}};
    p.encoding.add(static_cast<int>(rng() % n));
    const auto k = theorem2_witness(p, p.encoding.complement_in(n));
    REQUIRE(k.has_value());
    CHECK(k->empty());
  }
}

TEST_CASE("theorem 2 witness: K22 one-side set is blocked by the opposite vertex") {
  const Protocol p = all_encoding(families::complete_bipartite(2));
  const auto k = theorem2_witness(p, VertexSet{0, 1});
  REQUIRE(k.has_value());
  CHECK(*k == VertexSet{2});
  CHECK(oracle::t2_brute(p, VertexSet{0, 1}).has_value());
}

TEST_CASE("theorem 2 witness: empty set blocked by empty K") {
  const Protocol p = all_encoding(families::path(4));
  const auto k = theorem2_witness(p, VertexSet{});
  REQUIRE(k.has_value());
  CHECK(k->empty());
}

TEST_CASE("decide: verdicts and error paths") {
  const Protocol p = all_encoding(families::complete_bipartite(2));
  CHECK(decide(p, VertexSet{0, 2, 3}).status == CCStatus::accessible);
  CHECK(decide(p, VertexSet{0, 1}).status == CCStatus::blocked);
  CHECK(decide(p, VertexSet{}).status == CCStatus::blocked);
  CHECK_THROWS_AS(decide(p, VertexSet{0, 4}), invalid_input);
  const Protocol empty_enc{families::path(3), VertexSet{}};
  CHECK_THROWS_AS(decide(empty_enc, VertexSet{0}), invalid_input);
}

TEST_CASE("dichotomy: exactly one witness per subset, exhaustive n<=5 classes") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : sweep::graphs_up_to_iso(n, false)) {
      const Protocol p = all_encoding(g);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const auto d = theorem1_witness(p, VertexSet::from_bits(m));
        const auto k = theorem2_witness(p, VertexSet::from_bits(m));
        CHECK(d.has_value() != k.has_value());
        if (d) CHECK(validate_verdict(p, VertexSet::from_bits(m), {CCStatus::accessible, *d}));
        if (k) CHECK(validate_verdict(p, VertexSet::from_bits(m), {CCStatus::blocked, *k}));
      }
    }
  }
}

TEST_CASE("dichotomy holds for random encodings too") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    Protocol p{oracle::random_graph(rng, n), VertexSet::from_bits(rng() & VertexSet::full(n).bits)};
    if (p.encoding.empty()) p.encoding.add(0);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      CHECK(theorem1_witness(p, VertexSet::from_bits(m)).has_value() !=
            theorem2_witness(p, VertexSet::from_bits(m)).has_value());
  }
}

TEST_CASE("access structure of K22: one side plus a partner / all pairs block") {
  const Protocol p = all_encoding(families::complete_bipartite(2));
  const AccessStructure st = enumerate_access_structure(p);
  CHECK(st.acc_minimal == sorted_sets({VertexSet{0, 2, 3}, VertexSet{1, 2, 3},
                                       VertexSet{0, 1, 2}, VertexSet{0, 1, 3}}));
  CHECK(st.blk_minimal ==
        sorted_sets({VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{0, 3}, VertexSet{1, 2},
                     VertexSet{1, 3}, VertexSet{2, 3}}));
}

TEST_CASE("access structure of the torus: diagonals plus closed neighbourhoods") {
  const Protocol p = all_encoding(families::torus3x3());
  const AccessStructure st = enumerate_access_structure(p);
  std::vector<VertexSet> expected;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& perm : perms) {
    VertexSet d;
    for (int i = 0; i < 3; ++i) d.add(3 * i + perm[i]);
    expected.push_back(d);
  }
  for (int u = 0; u < 9; ++u) expected.push_back(p.graph.closed_neighbourhood(u));
  CHECK(st.acc_minimal == sorted_sets(expected));
  CHECK(st.acc_minimal.size() == 15);
}

TEST_CASE("access structure matches brute force on mixed instances") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Protocol p{oracle::random_graph(rng, n), VertexSet::from_bits(rng() & VertexSet::full(n).bits)};
    if (p.encoding.empty()) p.encoding = VertexSet::full(n);
    const AccessStructure st = enumerate_access_structure(p);
    const auto brute = oracle::access_map_brute(p);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      CHECK(st.accessible[m] == brute[m]);
  }
}

TEST_CASE("bipartite minus matching: enumeration vs brute force, n = 2..5") {
  // The one-endpoint-per-pair family is the truth only for odd n; for even
  // n exactly the choices with an odd number taken from the u-side access.
  for (int n = 2; n <= 5; ++n) {
    const Protocol p = all_encoding(families::bipartite_minus_matching(n));
    const AccessStructure st = enumerate_access_structure(p);
    std::vector<VertexSet> expected;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
      VertexSet s;
      int u_side = 0;
      for (int i = 0; i < n; ++i) {
        if ((pick >> i) & 1) {
          s.add(i);
          ++u_side;
        } else {
          s.add(n + i);
        }
      }
      if (n % 2 == 1 || u_side % 2 == 1) expected.push_back(s);
    }
    CHECK(st.acc_minimal == sorted_sets(expected));
    CHECK(st.acc_minimal.size() == (n % 2 == 1 ? (std::size_t{1} << n)
                                               : (std::size_t{1} << (n - 1))));
  }
}

TEST_CASE("threshold report: C5 is a (3,5) scheme") {
  const Protocol p = all_encoding(families::cycle(5));
  const ThresholdReport r = threshold_report(p);
  CHECK(r.n == 5);
  REQUIRE(r.k_access.has_value());
  CHECK(*r.k_access == 3);
  CHECK(r.k_privacy == 3);
  CHECK(r.is_threshold);
  CHECK(*r.k == 3);
}

TEST_CASE("threshold report: K22 is the degenerate (3,4) case, K33 is not one") {
  // At n = 2 every 3-subset contains one full side plus a partner, so the
  // scheme is a (3,4) threshold; from n = 3 on, balanced splits block and
  // the threshold property is lost.
  const Protocol k22 = all_encoding(families::complete_bipartite(2));
  const ThresholdReport r22 = threshold_report(k22);
  CHECK(r22.k_privacy == 3);
  REQUIRE(r22.k_access.has_value());
  CHECK(*r22.k_access == 3);
  CHECK(r22.is_threshold);

  const Protocol k33 = all_encoding(families::complete_bipartite(3));
  const ThresholdReport r33 = threshold_report(k33);
  CHECK(r33.k_privacy == 4);
  REQUIRE(r33.k_access.has_value());
  CHECK(*r33.k_access == 5);
  CHECK(!r33.is_threshold);
}

TEST_CASE("no (2,3) threshold exists on 3 vertices for any encoding") {
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    Graph g(3);
    int idx = 0;
    for (int u = 0; u < 3; ++u)
      for (int v = u + 1; v < 3; ++v, ++idx)
        if ((mask >> idx) & 1) g.add_edge(u, v);
    for (std::uint64_t a = 1; a < 8; ++a) {
      const Protocol p{g, VertexSet::from_bits(a)};
      const ThresholdReport r = threshold_report(p);
      CHECK(!(r.is_threshold && *r.k == 2));
    }
  }
}

TEST_CASE("qq access") {
  const Protocol torus = all_encoding(families::torus3x3());
  SUBCASE("closed neighbourhoods lift to quantum channels") {
    for (int u = 0; u < 9; ++u)
      CHECK(qq_access(torus, torus.graph.closed_neighbourhood(u)) == QQVerdict::yes);
  }
  SUBCASE("the full set always lifts") {
    CHECK(qq_access(torus, VertexSet::full(9)) == QQVerdict::yes);
    const Protocol k22 = all_encoding(families::complete_bipartite(2));
    CHECK(qq_access(k22, VertexSet::full(4)) == QQVerdict::yes);
  }
  SUBCASE("blocked sets stay blocked") {
    const Protocol k22 = all_encoding(families::complete_bipartite(2));
    CHECK(qq_access(k22, VertexSet{0, 1}) == QQVerdict::no);
  }
  SUBCASE("torus diagonals are accessible but do not lift (empirical)") {
    // The conjugate torus turns diagonals into triangles, which block, so
    // the lifted verdict is undetermined for every diagonal.
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : perms) {
      VertexSet d;
      for (int i = 0; i < 3; ++i) d.add(3 * i + perm[i]);
      CHECK(qq_access(torus, d) == QQVerdict::undetermined);
    }
  }
}

TEST_CASE("bound lemmas hold on every threshold found at n <= 5, A = V") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : sweep::graphs_up_to_iso(n, false)) {
      const Protocol p = all_encoding(g);
      const ThresholdReport r = threshold_report(p);
      for (const LemmaCheck& c : check_bound_lemmas(p, r)) CHECK(c.holds);
    }
  }
}

TEST_CASE("bound lemmas: C5 numbers are tight") {
  const Protocol p = all_encoding(families::cycle(5));
  const ThresholdReport r = threshold_report(p);
  const auto checks = check_bound_lemmas(p, r);
  REQUIRE(checks.size() == 3);
  for (const auto& c : checks) CHECK(c.holds);
  // |A| = 5 >= 5-3+1 = 3 and deg = 2 >= k-1 = 2
}

TEST_CASE("enumeration bound is enforced") {
  const Protocol p = all_encoding(families::complete_bipartite(2));
  CHECK_THROWS_AS(enumerate_access_structure(p, 3), limit_exceeded);
}

TEST_CASE("monotonicity, transversality, antichain on all n<=5 classes") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : sweep::graphs_up_to_iso(n, false)) {
      const Protocol p = all_encoding(g);
      const AccessStructure st = enumerate_access_structure(p);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (!st.accessible[m]) continue;
        for (int v = 0; v < n; ++v)
          CHECK(st.accessible[m | (std::uint64_t{1} << v)]);
      }
      for (const VertexSet& a : st.acc_minimal)
        for (const VertexSet& b : st.blk_minimal) CHECK(a.intersects(b));
      for (const VertexSet& a : st.acc_minimal)
        for (const VertexSet& b : st.acc_minimal)
          if (!(a == b)) CHECK(!a.subset_of(b));
    }
  }
}
