#pragma once

#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace gssa {

/// Correction-set map plus an integer layering encoding the partial order:
/// u comes strictly before v iff layer(u) < layer(v). Any valid gflow
/// admits a layered presentation, and layers make the order checks O(1).
struct GFlow {
  std::map<int, VertexSet> g;  // one entry per measured vertex
  std::map<int, int> layer;    // every vertex, outputs in the top layer
};

struct GFlowCheck {
  bool ok = true;
  int vertex = -1;     // first offender when !ok
  int condition = 0;   // 1: target not later; 2: odd set not later; 3: v not in Odd(g(v))
  std::string message;
};

/// Checks the three defining conditions; the domain must be exactly
/// V \ O with values inside V \ I.
GFlowCheck verify_gflow(const Graph& graph, VertexSet inputs, VertexSet outputs,
                        const GFlow& cand);

/// Layered backward construction: starting from the outputs, repeatedly
/// admits every vertex u with a correction set K ⊆ done\I whose odd
/// neighbourhood meets the unfinished region exactly in {u} (one GF(2)
/// solve per candidate). Returns a gflow that passes verify_gflow, or
/// nothing when none exists.
std::optional<GFlow> find_gflow(const Graph& graph, VertexSet inputs, VertexSet outputs);

/// Walk from an input to `target`: first step is a flow edge, no two
/// consecutive non-flow steps, and flow edges are only traversed forward
/// (from a measured vertex into its correction set).
struct InfluencingWalk {
  std::vector<int> vertices;
  std::vector<bool> step_is_flow;  // one flag per step
};

struct WalkEnumeration {
  std::vector<InfluencingWalk> walks;
  bool truncated = false;
};

/// Enumerates every influencing walk ending at `target` with at most
/// `max_len` steps, capped at `max_count` results.
WalkEnumeration influencing_walks(const Graph& graph, VertexSet inputs,
                                  const GFlow& flow, int target, int max_len,
                                  std::size_t max_count = 4096);

}  // namespace gssa
