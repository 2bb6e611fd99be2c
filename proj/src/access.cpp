#include "access.hpp"

#include <algorithm>

#include "gf2.hpp"
#include "json.hpp"

namespace gssa {

namespace {

// Subsets of a fixed popcount in increasing bitmask order (Gosper's hack).
template <typename F>
void for_each_subset_of_size(int n, int k, F&& f) {
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  if (k > n) return;
  const std::uint64_t limit = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  while (v < limit) {
    f(v);
    const std::uint64_t t = v | (v - 1);
    if (t == ~std::uint64_t{0}) break;
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
}

}  // namespace

std::optional<VertexSet> theorem1_witness(const Protocol& p, VertexSet s) {
  p.graph.check_subset(s);
  p.require_valid_encoding();
  const int n = p.graph.vertex_count();

  // Unknowns: indicator of D over all n vertices.
  // Rows: d_v = 0 for v outside S; (Γ·d)_v = 0 for v outside S (keeps
  // Odd(D) inside S); a·d = 1 (odd intersection with the encoding).
  gf2::Matrix m;
  m.cols = n;
  std::vector<std::uint64_t> rhs;
  std::uint64_t bit = 1;
  int row = 0;
  auto push = [&](std::uint64_t coeffs, bool b) {
    m.add_row(coeffs);
    if (row % 64 == 0) rhs.push_back(0);
    if (b) rhs.back() |= std::uint64_t{1} << (row % 64);
    ++row;
  };
  const VertexSet outside = s.complement_in(n);
  for (int v : outside.to_vector()) push(VertexSet::single(v).bits, false);
  for (int v : outside.to_vector()) push(p.graph.neighbours(v).bits, false);
  push(p.encoding.bits, true);
  (void)bit;

  const auto sol = gf2::solve_affine(m, rhs);
  if (!sol.consistent()) return std::nullopt;
  return VertexSet::from_bits(*sol.particular);
}

std::optional<VertexSet> theorem2_witness(const Protocol& p, VertexSet s) {
  p.graph.check_subset(s);
  const int n = p.graph.vertex_count();

  // Unknowns: indicator of K over all n vertices.
  // Rows: k_v = 0 for v in S; (Γ·k)_v = a_v for v in S.
  gf2::Matrix m;
  m.cols = n;
  std::vector<std::uint64_t> rhs;
  int row = 0;
  auto push = [&](std::uint64_t coeffs, bool b) {
    m.add_row(coeffs);
    if (row % 64 == 0) rhs.push_back(0);
    if (b) rhs.back() |= std::uint64_t{1} << (row % 64);
    ++row;
  };
  for (int v : s.to_vector()) push(VertexSet::single(v).bits, false);
  for (int v : s.to_vector()) push(p.graph.neighbours(v).bits, p.encoding.contains(v));

  const auto sol = gf2::solve_affine(m, rhs);
  if (!sol.consistent()) return std::nullopt;
  return VertexSet::from_bits(*sol.particular);
}

bool validate_verdict(const Protocol& p, VertexSet s, const AccessVerdict& v) {
  const Graph& g = p.graph;
  const int n = g.vertex_count();
  if (v.status == CCStatus::accessible) {
    const VertexSet d = v.witness;
    return d.subset_of(s) && (d | g.odd_neighbourhood(d)).subset_of(s) &&
           d.odd_overlap(p.encoding);
  }
  const VertexSet k = v.witness;
  return k.subset_of(s.complement_in(n)) &&
         (g.odd_neighbourhood(k) & s) == (p.encoding & s);
}

AccessVerdict decide(const Protocol& p, VertexSet s) {
  const auto d = theorem1_witness(p, s);
  const auto k = theorem2_witness(p, s);
  if (d.has_value() == k.has_value())
    throw consistency_violation(
        "access dichotomy violated for S=" + s.str() +
        (d ? ": both witness searches succeeded" : ": neither witness search succeeded"));
  AccessVerdict v = d ? AccessVerdict{CCStatus::accessible, *d}
                      : AccessVerdict{CCStatus::blocked, *k};
  if (!validate_verdict(p, s, v))
    throw consistency_violation("returned witness fails its defining equations for S=" +
                                s.str());
  return v;
}

AccessStructure enumerate_access_structure(const Protocol& p, int max_n) {
  p.require_valid_encoding();
  const int n = p.graph.vertex_count();
  if (n > max_n)
    throw limit_exceeded("enumeration bound exceeded: n=" + std::to_string(n) +
                         " > " + std::to_string(max_n));

  AccessStructure st;
  st.n = n;
  st.accessible.assign(std::size_t{1} << n, false);

  // Size-ascending sweep; supersets of recorded minimal accessing sets skip
  // the solver. When the pruning test fails and decide() says accessible,
  // every child S\{v} is already known blocked, so S is minimal.
  for (int size = 0; size <= n; ++size) {
    for_each_subset_of_size(n, size, [&](std::uint64_t mask) {
      const VertexSet s = VertexSet::from_bits(mask);
      bool pruned = false;
      for (const VertexSet& m : st.acc_minimal) {
        if (m.subset_of(s)) {
          st.accessible[mask] = true;
          pruned = true;
          break;
        }
      }
      if (pruned) return;
      const AccessVerdict v = decide(p, s);
      if (v.status == CCStatus::accessible) {
        st.accessible[mask] = true;
        st.acc_minimal.push_back(s);
      }
    });
  }

  // Minimal blocking sets from the complement map: B blocks iff V\B is not
  // accessible; minimal when every single give-back restores access.
  const std::uint64_t all = VertexSet::full(n).bits;
  for (int size = 0; size <= n; ++size) {
    for_each_subset_of_size(n, size, [&](std::uint64_t mask) {
      if (st.accessible[all & ~mask]) return;
      for (int v : VertexSet::from_bits(mask).to_vector())
        if (!st.accessible[(all & ~mask) | (std::uint64_t{1} << v)]) return;
      st.blk_minimal.push_back(VertexSet::from_bits(mask));
    });
  }

  auto by_size_then_mask = [](VertexSet a, VertexSet b) {
    return a.count() != b.count() ? a.count() < b.count() : a.bits < b.bits;
  };
  std::sort(st.acc_minimal.begin(), st.acc_minimal.end(), by_size_then_mask);
  std::sort(st.blk_minimal.begin(), st.blk_minimal.end(), by_size_then_mask);
  return st;
}

ThresholdReport threshold_report(const AccessStructure& st) {
  ThresholdReport r;
  r.n = st.n;
  int min_acc_size = st.n + 1;
  for (const VertexSet& s : st.acc_minimal)
    min_acc_size = std::min(min_acc_size, s.count());
  if (min_acc_size > st.n) {
    // No accessible set at all; cannot happen with a nonempty encoding.
    r.k_privacy = st.n;
    return r;
  }
  r.k_privacy = min_acc_size;

  for (int k = 0; k <= st.n; ++k) {
    bool all_ok = true;
    for_each_subset_of_size(st.n, k, [&](std::uint64_t mask) {
      if (!st.accessible[mask]) all_ok = false;
    });
    if (all_ok) {
      r.k_access = k;
      break;
    }
  }
  r.is_threshold = r.k_access.has_value() && *r.k_access == r.k_privacy;
  if (r.is_threshold) r.k = r.k_privacy;
  return r;
}

ThresholdReport threshold_report(const Protocol& p, int max_n) {
  return threshold_report(enumerate_access_structure(p, max_n));
}

QQVerdict qq_access(const Protocol& p, VertexSet s) {
  const AccessVerdict base = decide(p, s);
  if (base.status == CCStatus::blocked) return QQVerdict::no;
  const Protocol conj{p.graph.conjugate(p.encoding), p.encoding};
  const AccessVerdict lifted = decide(conj, s);
  return lifted.status == CCStatus::accessible ? QQVerdict::yes : QQVerdict::undetermined;
}

std::vector<LemmaCheck> check_bound_lemmas(const Protocol& p, const ThresholdReport& r) {
  std::vector<LemmaCheck> out;
  const int n = p.graph.vertex_count();

  LemmaCheck size_bound{"encoding_size", true, ""};
  LemmaCheck degree_bound{"encoding_degree", true, ""};
  LemmaCheck odd_no_go{"odd_n_no_go", true, ""};

  if (r.is_threshold) {
    const int k = *r.k;
    const int a_size = p.encoding.count();
    size_bound.holds = a_size >= n - k + 1;
    size_bound.detail = "|A|=" + std::to_string(a_size) + " vs n-k+1=" +
                        std::to_string(n - k + 1);
    for (int a : p.encoding.to_vector()) {
      if (p.graph.degree(a) < k - 1) {
        degree_bound.holds = false;
        degree_bound.detail = "deg(" + std::to_string(a) + ")=" +
                              std::to_string(p.graph.degree(a)) + " < k-1=" +
                              std::to_string(k - 1);
        break;
      }
    }
    const bool a_is_v = p.encoding == p.graph.vertices();
    if (n % 2 == 1 && a_is_v && k == n - 1) {
      odd_no_go.holds = false;
      odd_no_go.detail = "odd n=" + std::to_string(n) + " realizes a (n-1,n) scheme";
    }
  } else {
    size_bound.detail = degree_bound.detail = odd_no_go.detail = "not a threshold scheme";
  }
  out.push_back(size_bound);
  out.push_back(degree_bound);
  out.push_back(odd_no_go);
  return out;
}

std::string access_report_json(const Protocol& p, const AccessStructure& st,
                               const ThresholdReport& tr,
                               const std::vector<LemmaCheck>& lemmas) {
  nlohmann::ordered_json j;
  auto set_list = [](const std::vector<VertexSet>& sets) {
    auto arr = nlohmann::ordered_json::array();
    for (const VertexSet& s : sets) arr.push_back(s.to_vector());
    return arr;
  };
  j["acc_minimal"] = set_list(st.acc_minimal);
  j["blk_minimal"] = set_list(st.blk_minimal);
  if (tr.k_access)
    j["k_access"] = *tr.k_access;
  else
    j["k_access"] = nullptr;
  j["k_privacy"] = tr.k_privacy;
  j["is_threshold"] = tr.is_threshold;
  auto checks = nlohmann::ordered_json::array();
  for (const LemmaCheck& c : lemmas) {
    nlohmann::ordered_json e;
    e["lemma"] = c.id;
    e["holds"] = c.holds;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["lemma_checks"] = checks;
  (void)p;
  return j.dump();
}

}  // namespace gssa
