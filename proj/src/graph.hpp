#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace gssa {

inline constexpr int kMaxVertices = 64;

/// Undirected simple graph stored as one adjacency bit-row per vertex.
/// Row u is the open neighbourhood N(u); the structure is kept symmetric
/// and irreflexive by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, VertexSet{}) {
    if (n < 0 || n > kMaxVertices)
      throw invalid_input("vertex count must be in [0," +
                          std::to_string(kMaxVertices) + "], got " + std::to_string(n));
  }

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
    adj_[u].add(v);
    adj_[v].add(u);
  }

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbours(int u) const { return adj_[u]; }
  VertexSet closed_neighbourhood(int u) const { return adj_[u] | VertexSet::single(u); }
  int degree(int u) const { return adj_[u].count(); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u].to_vector())
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Odd(K) = {u : |N(u) ∩ K| odd}; equals the GF(2) adjacency-matrix
  /// product with K's indicator vector, and is GF(2)-linear in K.
  VertexSet odd_neighbourhood(VertexSet k) const {
    VertexSet out;
    for (int u = 0; u < n_; ++u)
      if (adj_[u].odd_overlap(k)) out.add(u);
    return out;
  }

  /// Complementation over a set: toggle exactly the edges with both
  /// endpoints in `a`. Defined for any a ⊆ V including a = V.
  Graph conjugate(VertexSet a) const {
    Graph g = *this;
    for (int u : a.to_vector())
      g.adj_[u] = g.adj_[u] ^ a.minus(VertexSet::single(u));
    return g;
  }

  bool is_connected() const;

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw invalid_input("vertex id " + std::to_string(v) + " out of range [0," +
                          std::to_string(n_) + ")");
  }
  void check_subset(VertexSet s) const {
    if (!s.subset_of(vertices()))
      throw invalid_input("set " + s.str() + " is not contained in the vertex range");
  }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// A secret-sharing instance: the substrate graph plus the encoding set A
/// the dealer acts on. The encoding may be empty in a parsed file, but every
/// access analysis rejects that at entry.
struct Protocol {
  Graph graph;
  VertexSet encoding;

  void require_valid_encoding() const {
    graph.check_subset(encoding);
    if (encoding.empty())
      throw invalid_input("encoding set is empty; access analysis is undefined");
  }
};

// Named generators. Vertex numbering is deterministic and documented:
//   complete_bipartite(n):       u-side 0..n-1, v-side n..2n-1
//   bipartite_minus_matching(n): same sides, matching (i, n+i) removed
//   torus3x3:                    vertex (i,j) -> 3i+j
//   cycle/path/complete(n):      natural 0..n-1 order
namespace families {
Graph complete_bipartite(int n);
Graph bipartite_minus_matching(int n);
Graph torus3x3();
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);

/// Dispatch by family name as used in files and on the command line.
/// Families without a size parameter ignore n.
Graph generate(const std::string& family, int n);
}  // namespace families

// On-disk protocol format:
//   {"n": int, "edges": [[i,j],...], "encoding": [int,...]}
// with i<j, no duplicates, no self-loops.
Protocol protocol_from_json(const std::string& text);
std::string protocol_to_json(const Protocol& p);

}  // namespace gssa
