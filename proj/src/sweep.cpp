#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_set>

#include "json.hpp"
#include "quantum.hpp"

namespace gssa {
namespace sweep {

namespace {

int pair_index(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  // index of (u,v), u<v, in lexicographic pair order
  int idx = 0;
  for (int a = 0; a < u; ++a) idx += n - a - 1;
  return idx + (v - u - 1);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx)
      if ((mask >> idx) & 1) g.add_edge(u, v);
  return g;
}

}  // namespace

std::vector<Graph> graphs_up_to_iso(int n, bool connected_only) {
  if (n < 1 || n > 6) throw invalid_input("graphs_up_to_iso supports 1 <= n <= 6");
  const int pairs = n * (n - 1) / 2;

  // Precompute, per permutation, where each pair index moves.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> remaps;
  do {
    std::vector<int> remap(pairs);
    int idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx)
        remap[idx] = pair_index(perm[u], perm[v], n);
    remaps.push_back(std::move(remap));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::uint64_t canon = mask;
    for (const auto& remap : remaps) {
      std::uint64_t img = 0;
      std::uint64_t rest = mask;
      while (rest) {
        const int b = std::countr_zero(rest);
        rest &= rest - 1;
        img |= std::uint64_t{1} << remap[b];
      }
      canon = std::min(canon, img);
      if (canon < mask) break;
    }
    if (canon != mask) continue;
    Graph g = graph_from_mask(n, mask);
    if (connected_only && !g.is_connected()) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> random_connected_graphs(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

namespace {

struct Shard {
  SuiteReport rep;
};

const char* privacy_name(PrivacyVerdict v) {
  switch (v) {
    case PrivacyVerdict::private_from: return "private";
    case PrivacyVerdict::accessible: return "accessible";
    default: return "neither";
  }
}

void check_protocol(const Protocol& p, bool with_quantum, SuiteReport& rep) {
  const int n = p.graph.vertex_count();
  const std::string pj = protocol_to_json(p);
  AccessStructure st;
  try {
    st = enumerate_access_structure(p);
  } catch (const consistency_violation& e) {
    rep.dichotomy.checked++;
    rep.dichotomy.failed++;
    rep.violations.push_back({"dichotomy", e.what(), pj, {}});
    return;
  }

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s = VertexSet::from_bits(mask);
    rep.subsets++;

    // Exactly one witness per subset, independent of the pruned sweep.
    rep.dichotomy.checked++;
    const auto d = theorem1_witness(p, s);
    const auto k = theorem2_witness(p, s);
    if (d.has_value() == k.has_value()) {
      rep.dichotomy.failed++;
      rep.violations.push_back({"dichotomy",
                                d ? "both witnesses exist" : "no witness exists", pj,
                                s.to_vector()});
      continue;
    }
    const bool acc = d.has_value();
    if (acc != st.accessible[mask]) {
      rep.dichotomy.failed++;
      rep.violations.push_back(
          {"dichotomy", "sweep map disagrees with direct witness search", pj,
           s.to_vector()});
    }

    if (with_quantum) {
      rep.oracle_agreement.checked++;
      rep.no_neither.checked++;
      const PrivacyVerdict q = privacy_check(p, s);
      if (q == PrivacyVerdict::neither) {
        rep.no_neither.failed++;
        rep.violations.push_back({"no_neither", "quantum check returned neither", pj,
                                  s.to_vector()});
      }
      const bool q_acc = q == PrivacyVerdict::accessible;
      if (q != PrivacyVerdict::neither && q_acc != acc) {
        rep.oracle_agreement.failed++;
        rep.violations.push_back({"oracle_agreement",
                                  std::string("decide says ") +
                                      (acc ? "accessible" : "blocked") +
                                      ", quantum says " + privacy_name(q),
                                  pj, s.to_vector()});
      }
    }
  }

  // Monotone access over the complete verdict map.
  rep.monotonicity.checked++;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!st.accessible[mask]) continue;
    for (int v = 0; v < n; ++v) {
      const std::uint64_t up = mask | (std::uint64_t{1} << v);
      if (!st.accessible[up]) {
        rep.monotonicity.failed++;
        rep.violations.push_back({"monotonicity",
                                  "superset of an accessible set is blocked", pj,
                                  VertexSet::from_bits(up).to_vector()});
      }
    }
  }

  rep.transversality.checked++;
  for (const VertexSet& a : st.acc_minimal)
    for (const VertexSet& b : st.blk_minimal)
      if (!a.intersects(b)) {
        rep.transversality.failed++;
        rep.violations.push_back({"transversality",
                                  "accessing set " + a.str() +
                                      " misses blocking set " + b.str(),
                                  pj, {}});
      }

  rep.antichain.checked++;
  auto antichain_ok = [](const std::vector<VertexSet>& fam) {
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = 0; j < fam.size(); ++j)
        if (i != j && fam[i].subset_of(fam[j])) return false;
    return true;
  };
  if (!antichain_ok(st.acc_minimal) || !antichain_ok(st.blk_minimal)) {
    rep.antichain.failed++;
    rep.violations.push_back({"antichain", "containment inside a minimal family", pj, {}});
  }

  const ThresholdReport tr = threshold_report(st);
  if (tr.is_threshold) {
    rep.lemma_bounds.checked++;
    for (const LemmaCheck& c : check_bound_lemmas(p, tr))
      if (!c.holds) {
        rep.lemma_bounds.failed++;
        rep.violations.push_back({"lemma_bounds", c.id + ": " + c.detail, pj, {}});
      }
  }
}

void merge(SuiteReport& into, const SuiteReport& from) {
  into.graphs += from.graphs;
  into.subsets += from.subsets;
  auto add = [](PropertyCount& a, const PropertyCount& b) {
    a.checked += b.checked;
    a.failed += b.failed;
  };
  add(into.oracle_agreement, from.oracle_agreement);
  add(into.dichotomy, from.dichotomy);
  add(into.no_neither, from.no_neither);
  add(into.monotonicity, from.monotonicity);
  add(into.transversality, from.transversality);
  add(into.antichain, from.antichain);
  add(into.lemma_bounds, from.lemma_bounds);
  add(into.no_2_3_threshold, from.no_2_3_threshold);
  add(into.odd_n_no_go, from.odd_n_no_go);
  into.violations.insert(into.violations.end(), from.violations.begin(),
                         from.violations.end());
}

}  // namespace

SuiteReport run_verify_suite(const SuiteOptions& opt) {
  if (opt.max_n < 1 || opt.max_n > 8)
    throw invalid_input("verify suite: max_n must be in [1,8]");

  SuiteReport rep;
  rep.max_n = opt.max_n;

  // Work list: exhaustive connected iso classes with A = V up to
  // min(max_n, 6), then reproducible random (G, A) pairs above that.
  std::vector<Protocol> work;
  for (int n = 1; n <= std::min(opt.max_n, 6); ++n)
    for (Graph& g : graphs_up_to_iso(n, /*connected_only=*/true))
      work.push_back({std::move(g), VertexSet::full(n)});
  if (opt.max_n > 6) {
    std::mt19937_64 rng(opt.seed);
    for (int n = 7; n <= opt.max_n; ++n)
      for (Graph& g : random_connected_graphs(n, std::max(1, opt.random_pairs), opt.seed + n)) {
        VertexSet a = VertexSet::from_bits(rng() & VertexSet::full(n).bits);
        if (a.empty()) a = VertexSet::full(n);
        work.push_back({std::move(g), a});
      }
  }

  const int workers = std::max(1, opt.workers);
  std::vector<Shard> shards(workers);
  std::atomic<std::size_t> next{0};
  auto body = [&](int w) {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= work.size()) break;
      shards[w].rep.graphs++;
      check_protocol(work[i], /*with_quantum=*/true, shards[w].rep);
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
  }
  for (const Shard& s : shards) merge(rep, s.rep);

  // (2,3) impossibility: all 3-vertex graphs, every nonempty encoding.
  if (opt.max_n >= 3) {
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
      const Graph g = graph_from_mask(3, mask);
      for (std::uint64_t a = 1; a < 8; ++a) {
        rep.no_2_3_threshold.checked++;
        const Protocol p{g, VertexSet::from_bits(a)};
        const ThresholdReport tr = threshold_report(p);
        if (tr.is_threshold && *tr.k == 2) {
          rep.no_2_3_threshold.failed++;
          rep.violations.push_back({"no_2_3_threshold", "found a (2,3) scheme",
                                    protocol_to_json(p), {}});
        }
      }
    }
  }

  // Odd-n (n-1,n) exclusion with A = V, exhaustive over labeled graphs.
  for (int n : {3, 5}) {
    if (n > opt.max_n) continue;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      rep.odd_n_no_go.checked++;
      const Protocol p{graph_from_mask(n, mask), VertexSet::full(n)};
      const ThresholdReport tr = threshold_report(p);
      if (tr.is_threshold && *tr.k == n - 1) {
        rep.odd_n_no_go.failed++;
        rep.violations.push_back({"odd_n_no_go",
                                  "found a (" + std::to_string(n - 1) + "," +
                                      std::to_string(n) + ") scheme with A=V",
                                  protocol_to_json(p), {}});
      }
    }
  }

  if (opt.inject_fault) {
    // Negative control: corrupt a correct witness and require the validator
    // to reject it.
    const Protocol p{families::cycle(5), VertexSet::full(5)};
    AccessVerdict v = decide(p, VertexSet::full(5));
    v.witness.toggle(v.witness.contains(0) ? 0 : 1);
    if (!validate_verdict(p, VertexSet::full(5), v))
      rep.violations.push_back({"injected_fault", "mutated witness rejected as designed",
                                protocol_to_json(p), VertexSet::full(5).to_vector()});
    else
      rep.violations.push_back({"injected_fault",
                                "mutated witness was NOT caught by validation",
                                protocol_to_json(p), VertexSet::full(5).to_vector()});
  }
  return rep;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["max_n"] = max_n;
  j["graphs"] = graphs;
  j["subsets"] = subsets;
  auto prop = [](const PropertyCount& c) {
    nlohmann::ordered_json o;
    o["checked"] = c.checked;
    o["failed"] = c.failed;
    return o;
  };
  nlohmann::ordered_json props;
  props["oracle_agreement"] = prop(oracle_agreement);
  props["dichotomy"] = prop(dichotomy);
  props["no_neither"] = prop(no_neither);
  props["monotonicity"] = prop(monotonicity);
  props["transversality"] = prop(transversality);
  props["antichain"] = prop(antichain);
  props["lemma_bounds"] = prop(lemma_bounds);
  props["no_2_3_threshold"] = prop(no_2_3_threshold);
  props["odd_n_no_go"] = prop(odd_n_no_go);
  j["properties"] = props;
  auto viols = nlohmann::ordered_json::array();
  for (const Violation& v : violations) {
    nlohmann::ordered_json o;
    o["property"] = v.property;
    o["detail"] = v.detail;
    o["protocol"] = nlohmann::ordered_json::parse(v.protocol_json);
    o["subset"] = v.subset;
    viols.push_back(o);
  }
  j["violations"] = viols;
  j["ok"] = ok();
  return j.dump();
}

}  // namespace sweep
}  // namespace gssa
