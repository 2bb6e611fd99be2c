#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace gssa {

enum class MeasBasis { XY, Z };

struct Measurement {
  MeasBasis basis = MeasBasis::XY;
  double angle = 0.0;  // radians, (X,Y)-plane; ignored for Z
};

/// One-way-model program in standard form: entangle every graph edge,
/// measure each non-output qubit in `order`, apply conditional Pauli
/// corrections keyed on earlier outcomes. Non-input qubits are implicitly
/// prepared in (|0>+|1>)/sqrt(2). Z-basis measurements only arise from
/// trace-out rewriting.
struct Pattern {
  Graph graph;
  VertexSet inputs;
  VertexSet outputs;
  std::map<int, Measurement> measurements;   // one entry per v in V \ O
  std::vector<int> order;                    // measured vertices, execution order
  std::map<int, VertexSet> x_corrections;    // source -> X targets
  std::map<int, VertexSet> z_corrections;    // source -> Z targets

  VertexSet measured() const { return outputs.complement_in(graph.vertex_count()); }

  /// Throws invalid_input on a malformed pattern: a non-output without a
  /// measurement (or vice versa), an order that is not exactly the measured
  /// set, corrections sourced at unmeasured qubits, or a correction whose
  /// target is measured before its signal source.
  void validate() const;

  int order_position(int v) const;
};

/// Moves u into the outputs and substitutes s_u := 0, deleting u's angle
/// and every correction conditioned on u's outcome. u must be measured and
/// not an input.
Pattern remove_measurement(const Pattern& pat, int u);

/// Rewrites the output qubit u into a Z-basis measurement performed first,
/// with Z corrections keyed on its outcome appended on every graph
/// neighbour of u; corrections that targeted u are dropped (they act on a
/// qubit that no longer reaches the output, so they cannot be observed).
Pattern trace_out_rewrite(const Pattern& pat, int u);

// Pattern JSON:
//   {"n": int, "edges": [[i,j]], "inputs": [ids], "outputs": [ids],
//    "angles": {"id": radians}, "x_corrections": {"src": [targets]},
//    "z_corrections": {"src": [targets]}}
// The measurement order is derived as the lowest-vertex-first topological
// order of the signal dependencies. Patterns containing Z-basis
// measurements carry an extra "z_measured" array when serialized.
Pattern pattern_from_json(const std::string& text);
std::string pattern_to_json(const Pattern& pat);

}  // namespace gssa
