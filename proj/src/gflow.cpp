#include "gflow.hpp"

#include <algorithm>

#include "gf2.hpp"

namespace gssa {

GFlowCheck verify_gflow(const Graph& graph, VertexSet inputs, VertexSet outputs,
                        const GFlow& cand) {
  const int n = graph.vertex_count();
  graph.check_subset(inputs);
  graph.check_subset(outputs);
  const VertexSet measured = outputs.complement_in(n);

  VertexSet domain;
  for (const auto& [v, k] : cand.g) domain.add(v);
  if (domain != measured)
    throw invalid_input("gflow domain must be exactly the measured set " +
                        measured.str() + ", got " + domain.str());
  for (int v = 0; v < n; ++v)
    if (!cand.layer.count(v))
      throw invalid_input("gflow layering misses vertex " + std::to_string(v));

  auto lay = [&](int v) { return cand.layer.at(v); };
  for (const auto& [v, k] : cand.g) {
    if (!k.subset_of(inputs.complement_in(n)))
      throw invalid_input("gflow correction set of " + std::to_string(v) +
                          " touches an input");
    for (int j : k.to_vector())
      if (lay(v) >= lay(j))
        return {false, v, 1,
                "correction target " + std::to_string(j) + " of " + std::to_string(v) +
                    " is not strictly later"};
    const VertexSet odd = graph.odd_neighbourhood(k);
    for (int j : odd.to_vector())
      if (j != v && lay(v) >= lay(j))
        return {false, v, 2,
                "odd neighbourhood of g(" + std::to_string(v) + ") reaches " +
                    std::to_string(j) + " which is not strictly later"};
    if (!odd.contains(v))
      return {false, v, 3,
              std::to_string(v) + " is not in the odd neighbourhood of its own set"};
  }
  return {};
}

std::optional<GFlow> find_gflow(const Graph& graph, VertexSet inputs, VertexSet outputs) {
  const int n = graph.vertex_count();
  graph.check_subset(inputs);
  graph.check_subset(outputs);

  VertexSet done = outputs;
  std::vector<std::pair<int, VertexSet>> found;  // (vertex, correction set)
  std::vector<int> group_of(n, -1);
  int group = 0;

  while (done != VertexSet::full(n)) {
    const VertexSet allowed = done.minus(inputs);
    const std::vector<int> allowed_vec = allowed.to_vector();
    std::vector<std::pair<int, VertexSet>> batch;

    for (int u : done.complement_in(n).to_vector()) {
      // K over columns indexed by `allowed_vec`; for every vertex w outside
      // done the row asks (Γ·K)_w = [w == u].
      gf2::Matrix m;
      m.cols = static_cast<int>(allowed_vec.size());
      std::vector<std::uint64_t> rhs;
      int row = 0;
      for (int w : done.complement_in(n).to_vector()) {
        std::uint64_t coeffs = 0;
        for (std::size_t c = 0; c < allowed_vec.size(); ++c)
          if (graph.adjacent(w, allowed_vec[c])) coeffs |= std::uint64_t{1} << c;
        m.add_row(coeffs);
        if (row % 64 == 0) rhs.push_back(0);
        if (w == u) rhs.back() |= std::uint64_t{1} << (row % 64);
        ++row;
      }
      const auto sol = gf2::solve_affine(m, rhs);
      if (!sol.consistent()) continue;
      VertexSet k;
      for (std::size_t c = 0; c < allowed_vec.size(); ++c)
        if ((*sol.particular >> c) & 1) k.add(allowed_vec[c]);
      batch.emplace_back(u, k);
    }
    if (batch.empty()) return std::nullopt;
    ++group;
    for (auto& [u, k] : batch) {
      done.add(u);
      group_of[u] = group;
      found.emplace_back(u, k);
    }
  }

  GFlow flow;
  for (auto& [u, k] : found) flow.g[u] = k;
  const int top = group + 1;
  for (int v = 0; v < n; ++v)
    flow.layer[v] = group_of[v] < 0 ? top : top - group_of[v];
  return flow;
}

WalkEnumeration influencing_walks(const Graph& graph, VertexSet inputs, const GFlow& flow,
                                  int target, int max_len, std::size_t max_count) {
  graph.check_vertex(target);
  WalkEnumeration out;

  auto is_flow_step = [&](int a, int b) {
    auto it = flow.g.find(a);
    return it != flow.g.end() && it->second.contains(b);
  };

  // DFS over (current walk, last step kind). Walks may repeat vertices, so
  // length is the only terminator.
  struct Frame {
    std::vector<int> verts;
    std::vector<bool> kinds;
  };
  std::vector<Frame> stack;
  for (int i : inputs.to_vector())
    stack.push_back(Frame{{i}, {}});

  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const int cur = f.verts.back();

    if (f.verts.size() > 1 && cur == target) {
      if (out.walks.size() >= max_count) {
        out.truncated = true;
        return out;
      }
      out.walks.push_back({f.verts, f.kinds});
    }
    if (static_cast<int>(f.kinds.size()) >= max_len) continue;

    for (int nxt : graph.neighbours(cur).to_vector()) {
      const bool fwd_flow = is_flow_step(cur, nxt);
      const bool bwd_flow = is_flow_step(nxt, cur);
      bool kind;
      if (fwd_flow) {
        kind = true;
      } else if (bwd_flow) {
        continue;  // flow edges are traversed forward only
      } else {
        kind = false;
      }
      if (f.kinds.empty() && !kind) continue;  // must start with a flow edge
      if (!f.kinds.empty() && !f.kinds.back() && !kind) continue;  // no two non-flow steps
      Frame nf = f;
      nf.verts.push_back(nxt);
      nf.kinds.push_back(kind);
      stack.push_back(std::move(nf));
    }
  }
  std::sort(out.walks.begin(), out.walks.end(),
            [](const InfluencingWalk& a, const InfluencingWalk& b) {
              return a.vertices.size() != b.vertices.size()
                         ? a.vertices.size() < b.vertices.size()
                         : a.vertices < b.vertices;
            });
  return out;
}

}  // namespace gssa
