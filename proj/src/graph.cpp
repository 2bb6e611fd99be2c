#include "graph.hpp"

#include <set>

#include "json.hpp"

namespace gssa {

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int u : frontier.to_vector()) next = next | adj_[u];
    frontier = next.minus(seen);
    seen = seen | next;
  }
  return seen == vertices();
}

namespace families {

namespace {
void require_positive(int n, const char* family) {
  if (n < 1) throw invalid_input(std::string(family) + " requires n >= 1");
}
}  // namespace

Graph complete_bipartite(int n) {
  require_positive(n, "complete_bipartite");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.add_edge(i, n + j);
  return g;
}

Graph bipartite_minus_matching(int n) {
  require_positive(n, "bipartite_minus_matching");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) g.add_edge(i, n + j);
  return g;
}

Graph torus3x3() {
  Graph g(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      g.add_edge(3 * i + j, 3 * i + (j + 1) % 3);
      g.add_edge(3 * i + j, 3 * ((i + 1) % 3) + j);
    }
  return g;
}

Graph cycle(int n) {
  require_positive(n, "cycle");
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  require_positive(n, "path");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  require_positive(n, "complete");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph generate(const std::string& family, int n) {
  if (family == "complete_bipartite") return complete_bipartite(n);
  if (family == "bipartite_minus_matching") return bipartite_minus_matching(n);
  if (family == "torus3x3") return torus3x3();
  if (family == "cycle") return cycle(n);
  if (family == "path") return path(n);
  if (family == "complete") return complete(n);
  throw invalid_input("unknown graph family '" + family + "'");
}

}  // namespace families

Protocol protocol_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input(std::string("graph JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw invalid_input("graph JSON must be an object with integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxVertices)
    throw invalid_input("graph JSON: n must be in [1," + std::to_string(kMaxVertices) + "]");
  Graph g(n);
  if (!j.contains("edges") || !j["edges"].is_array())
    throw invalid_input("graph JSON: missing 'edges' array");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw invalid_input("graph JSON: each edge must be a pair of integers");
    const int u = e[0].get<int>(), v = e[1].get<int>();
    if (u >= v) throw invalid_input("graph JSON: edges must satisfy i < j");
    if (v >= n) throw invalid_input("graph JSON: edge endpoint out of range");
    if (!seen.insert({u, v}).second) throw invalid_input("graph JSON: duplicate edge");
    g.add_edge(u, v);
  }
  Protocol p{g, VertexSet{}};
  if (j.contains("encoding")) {
    if (!j["encoding"].is_array()) throw invalid_input("graph JSON: 'encoding' must be an array");
    std::set<int> enc_seen;
    for (const auto& a : j["encoding"]) {
      if (!a.is_number_integer()) throw invalid_input("graph JSON: encoding ids must be integers");
      const int v = a.get<int>();
      if (v < 0 || v >= n) throw invalid_input("graph JSON: encoding id out of range");
      if (!enc_seen.insert(v).second) throw invalid_input("graph JSON: duplicate encoding id");
      p.encoding.add(v);
    }
  }
  return p;
}

std::string protocol_to_json(const Protocol& p) {
  nlohmann::ordered_json j;
  j["n"] = p.graph.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : p.graph.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  j["encoding"] = p.encoding.to_vector();
  return j.dump();
}

}  // namespace gssa
