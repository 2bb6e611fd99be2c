#include "pointless.hpp"

#include <cmath>
#include <complex>

#include "gf2.hpp"

namespace gssa {

std::vector<long long> index_sets(int m, int n, long long p, long long q) {
  if (n < 1 || n > m) throw invalid_input("index_sets: need 1 <= n <= m");
  if (m > 62) throw invalid_input("index_sets: m too large");
  const long long two_n = 1LL << n;
  if (p < 1 || p > two_n || q < 1 || q > two_n)
    throw invalid_input("index_sets: p,q must lie in [1, 2^n]");
  const long long step = two_n - 1;
  const long long lo = (q - 1) * (1LL << (m - n)) + 1;
  const long long hi = q * (1LL << (m - n));
  if (step == 0) throw invalid_input("index_sets: degenerate step (n = 0)");
  // smallest k with p + k*step >= lo; largest k' with p + k'*step <= hi
  auto ceil_div = [](long long a, long long b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
  };
  auto floor_div = [](long long a, long long b) {
    return a >= 0 ? a / b : -(((-a) + b - 1) / b);
  };
  const long long k = ceil_div(lo - p, step);
  const long long kp = floor_div(hi - p, step);
  std::vector<long long> out;
  for (long long i = k; i <= kp; ++i) out.push_back(p + i * step);
  return out;
}

namespace {

gf2::AffineSolution condition_a_system(const Graph& graph, VertexSet outputs, int p,
                                       std::vector<int>* cols_out) {
  graph.check_vertex(p);
  graph.check_subset(outputs);
  const int n = graph.vertex_count();
  const VertexSet candidates =
      outputs.complement_in(n).minus(VertexSet::single(p));
  const std::vector<int> cols = candidates.to_vector();
  const VertexSet np = graph.neighbours(p);

  // Homogeneous system: for every w outside N(p) — including p itself —
  // the odd neighbourhood of S must miss w.
  gf2::Matrix m;
  m.cols = static_cast<int>(cols.size());
  std::vector<std::uint64_t> rhs;
  int row = 0;
  for (int w : np.complement_in(n).to_vector()) {
    std::uint64_t coeffs = 0;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (graph.adjacent(w, cols[c])) coeffs |= std::uint64_t{1} << c;
    m.add_row(coeffs);
    if (row % 64 == 0) rhs.push_back(0);
    ++row;
  }
  if (cols_out) *cols_out = cols;
  return gf2::solve_affine(m, rhs);
}

VertexSet unpack(const std::vector<int>& cols, std::uint64_t packed) {
  VertexSet s;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if ((packed >> c) & 1) s.add(cols[c]);
  return s;
}

}  // namespace

std::optional<VertexSet> theorem4_condition_a(const Graph& graph, VertexSet outputs,
                                              int p) {
  std::vector<int> cols;
  const auto sol = condition_a_system(graph, outputs, p, &cols);
  if (!sol.consistent() || sol.basis.empty()) return std::nullopt;
  return unpack(cols, sol.basis.front());
}

std::vector<VertexSet> theorem4_condition_a_all(const Graph& graph, VertexSet outputs,
                                                int p, std::size_t cap) {
  std::vector<int> cols;
  const auto sol = condition_a_system(graph, outputs, p, &cols);
  std::vector<VertexSet> out;
  if (!sol.consistent()) return out;
  const auto en = gf2::enumerate_solutions(sol, cap);
  for (std::uint64_t packed : en.solutions)
    if (packed) out.push_back(unpack(cols, packed));
  return out;
}

bool theorem4_condition_b(const Pattern& residual, VertexSet s, double tol) {
  const int m = residual.graph.vertex_count();
  const int n_in = residual.inputs.count();
  const int n_out = residual.outputs.count();
  if (n_in != n_out)
    throw invalid_input("theorem4_condition_b: requires |I| = |O|");
  if (n_in < 1) throw invalid_input("theorem4_condition_b: requires at least one input");
  if (m > 20) throw limit_exceeded("theorem4_condition_b: pattern too large");
  residual.graph.check_subset(s);
  if (s.intersects(residual.outputs))
    throw invalid_input("theorem4_condition_b: S must avoid the outputs");
  for (int v : residual.measured().to_vector())
    if (residual.measurements.at(v).basis != MeasBasis::XY)
      throw invalid_input("theorem4_condition_b: all measurements must be XY-plane");

  const std::vector<int> meas = residual.measured().to_vector();
  const std::complex<double> mi{0.0, -1.0};
  const long long two_n = 1LL << n_in;
  for (long long p = 1; p <= two_n; ++p) {
    for (long long q = 1; q <= two_n; ++q) {
      std::complex<double> lhs{0, 0}, rhs{0, 0};
      for (long long x : index_sets(m, n_in, p, q)) {
        const std::uint64_t bits = static_cast<std::uint64_t>(x - 1);
        double ph1 = 0, ph2 = 0;
        for (int j : meas) {
          if (!((bits >> j) & 1)) continue;
          const double a = residual.measurements.at(j).angle;
          ph1 += a;
          ph2 += s.contains(j) ? -a : a;
        }
        lhs += std::exp(mi * ph1);
        rhs += std::exp(mi * ph2);
      }
      if (std::abs(lhs - rhs) > tol) return false;
    }
  }
  return true;
}

bool is_pointless_semantic(const Pattern& pat, int u, double tol, int sim_bound) {
  const Pattern deleted = trace_out_rewrite(remove_measurement(pat, u), u);
  return channels_equal(channel_of(pat, sim_bound), channel_of(deleted, sim_bound), tol);
}

Pattern residual_pattern(const Pattern& pat, int p) {
  pat.graph.check_vertex(p);
  if (pat.x_corrections.count(p) || pat.z_corrections.count(p))
    throw invalid_input("residual_pattern: corrections keyed on the candidate qubit");
  const int n = pat.graph.vertex_count();
  std::vector<int> remap(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (v != p) remap[v] = next++;

  Pattern out;
  out.graph = Graph(n - 1);
  for (auto [a, b] : pat.graph.edges())
    if (a != p && b != p) out.graph.add_edge(remap[a], remap[b]);
  auto remap_set = [&](VertexSet s) {
    VertexSet r;
    for (int v : s.to_vector())
      if (v != p) r.add(remap[v]);
    return r;
  };
  out.inputs = remap_set(pat.inputs);
  out.outputs = remap_set(pat.outputs);
  for (const auto& [v, meas] : pat.measurements)
    if (v != p) out.measurements[remap[v]] = meas;
  for (int v : pat.order)
    if (v != p) out.order.push_back(remap[v]);
  for (const auto& [src, targets] : pat.x_corrections)
    out.x_corrections[remap[src]] = remap_set(targets);
  for (const auto& [src, targets] : pat.z_corrections)
    out.z_corrections[remap[src]] = remap_set(targets);
  return out;
}

Theorem4Report theorem4_check(const Pattern& pat, int p, double tol) {
  Theorem4Report rep;
  const auto witnesses = theorem4_condition_a_all(pat.graph, pat.outputs, p);
  if (witnesses.empty()) return rep;
  rep.condition_a = true;
  rep.witness = witnesses.front();

  const Pattern residual = residual_pattern(pat, p);
  const int n = pat.graph.vertex_count();
  for (const VertexSet& w : witnesses) {
    // Re-express the witness in residual numbering (p is never in it).
    VertexSet remapped;
    for (int v : w.to_vector()) remapped.add(v < p ? v : v - 1);
    if (theorem4_condition_b(residual, remapped, tol)) {
      rep.condition_b = true;
      rep.witness = w;
      break;
    }
  }
  rep.structural_pointless = rep.condition_a && rep.condition_b;
  (void)n;
  return rep;
}

Graph augment_with_dealer(const Protocol& p) {
  p.require_valid_encoding();
  const int n = p.graph.vertex_count();
  Graph g(n + 1);
  for (auto [u, v] : p.graph.edges()) g.add_edge(u, v);
  for (int a : p.encoding.to_vector()) g.add_edge(a, n);
  return g;
}

std::vector<Theorem3SubsetReport> theorem3_check(const Protocol& p, int k,
                                                 const PatternProvider& provider,
                                                 double tol) {
  p.require_valid_encoding();
  const int n = p.graph.vertex_count();
  if (k < 0 || k > n) throw invalid_input("theorem3_check: k out of range");
  const Graph expected = augment_with_dealer(p);
  const int dealer = n;

  std::vector<Theorem3SubsetReport> out;
  std::vector<int> idx(k);
  // Iterate |S| = k subsets in ascending bitmask order.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    Theorem3SubsetReport rep;
    rep.subset = VertexSet::from_bits(mask);
    const auto pat = provider(rep.subset);
    if (pat.has_value()) {
      rep.pattern_supplied = true;
      rep.graph_matches = pat->graph == expected &&
                          pat->inputs == VertexSet::single(dealer) &&
                          pat->outputs.count() == 1 &&
                          pat->outputs.subset_of(rep.subset);
      if (!rep.graph_matches)
        throw invalid_input("theorem3_check: candidate pattern for S=" +
                            rep.subset.str() +
                            " is not a dealer-augmented single-output pattern");
      const Channel c = channel_of(*pat);
      rep.unitary = is_unitary_channel(c, tol);
      bool all_pointless = true;
      for (int u : rep.subset.complement_in(n).to_vector()) {
        const bool pl = is_pointless_semantic(*pat, u, tol);
        rep.excluded.push_back({u, pl});
        all_pointless = all_pointless && pl;
      }
      rep.pass = rep.unitary && all_pointless;
    }
    out.push_back(std::move(rep));
  }
  (void)idx;
  return out;
}

std::vector<PointlessExtension> search_pointless_extensions(const Pattern& base,
                                                            std::size_t max_results) {
  const int n = base.graph.vertex_count();
  if (n + 1 > kSimulationBound)
    throw limit_exceeded("search_pointless_extensions: base pattern too large");
  std::vector<PointlessExtension> out;
  const std::vector<double> angles = {0.0, M_PI, M_PI / 3};

  // Candidate neighbourhoods for the added qubit; outputs stay untouched
  // so the added qubit attaches to measured qubits only.
  const std::vector<int> attach_pool = base.outputs.complement_in(n).to_vector();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << attach_pool.size()); ++mask) {
    VertexSet attach;
    for (std::size_t i = 0; i < attach_pool.size(); ++i)
      if ((mask >> i) & 1) attach.add(attach_pool[i]);

    for (double angle : angles) {
      Pattern ext;
      ext.graph = Graph(n + 1);
      for (auto [a, b] : base.graph.edges()) ext.graph.add_edge(a, b);
      for (int v : attach.to_vector()) ext.graph.add_edge(v, n);
      ext.inputs = base.inputs;
      ext.outputs = base.outputs;
      ext.measurements = base.measurements;
      ext.measurements[n] = Measurement{MeasBasis::XY, angle};
      ext.order = base.order;
      ext.order.insert(ext.order.begin(), n);
      ext.x_corrections = base.x_corrections;
      ext.z_corrections = base.z_corrections;

      PointlessExtension cand;
      cand.attach = attach;
      cand.angle = angle;
      cand.structural = theorem4_check(ext, n);
      cand.semantic = is_pointless_semantic(ext, n);
      if (cand.semantic) {
        out.push_back(cand);
        if (out.size() >= max_results) return out;
        break;  // one angle suffices per attachment once it works
      }
    }
  }
  return out;
}

}  // namespace gssa
