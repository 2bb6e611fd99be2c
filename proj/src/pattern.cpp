#include "pattern.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace gssa {

int Pattern::order_position(int v) const {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == v) return static_cast<int>(i);
  return -1;
}

void Pattern::validate() const {
  const int n = graph.vertex_count();
  graph.check_subset(inputs);
  graph.check_subset(outputs);
  const VertexSet meas = measured();

  for (int v : meas.to_vector())
    if (!measurements.count(v))
      throw invalid_input("pattern: non-output qubit " + std::to_string(v) +
                          " has no measurement");
  for (const auto& [v, m] : measurements)
    if (outputs.contains(v))
      throw invalid_input("pattern: output qubit " + std::to_string(v) +
                          " carries a measurement");

  if (static_cast<int>(order.size()) != meas.count())
    throw invalid_input("pattern: measurement order must cover the measured set");
  VertexSet seen;
  for (int v : order) {
    graph.check_vertex(v);
    if (!meas.contains(v) || seen.contains(v))
      throw invalid_input("pattern: bad measurement order at qubit " + std::to_string(v));
    seen.add(v);
  }

  auto check_corr = [&](const std::map<int, VertexSet>& corr, const char* kind) {
    for (const auto& [src, targets] : corr) {
      if (!meas.contains(src))
        throw invalid_input(std::string("pattern: ") + kind +
                            " correction signal references unmeasured qubit " +
                            std::to_string(src));
      graph.check_subset(targets);
      for (int t : targets.to_vector()) {
        if (outputs.contains(t)) continue;
        if (order_position(t) <= order_position(src))
          throw invalid_input(std::string("pattern: ") + kind + " correction " +
                              std::to_string(src) + "->" + std::to_string(t) +
                              " violates signal causality");
      }
    }
  };
  check_corr(x_corrections, "X");
  check_corr(z_corrections, "Z");
  (void)n;
}

Pattern remove_measurement(const Pattern& pat, int u) {
  pat.graph.check_vertex(u);
  if (pat.inputs.contains(u))
    throw invalid_input("remove_measurement: qubit " + std::to_string(u) + " is an input");
  if (pat.outputs.contains(u))
    throw invalid_input("remove_measurement: qubit " + std::to_string(u) +
                        " is already an output");
  Pattern out = pat;
  out.outputs.add(u);
  out.measurements.erase(u);
  out.order.erase(std::remove(out.order.begin(), out.order.end(), u), out.order.end());
  out.x_corrections.erase(u);
  out.z_corrections.erase(u);
  return out;
}

Pattern trace_out_rewrite(const Pattern& pat, int u) {
  pat.graph.check_vertex(u);
  if (!pat.outputs.contains(u))
    throw invalid_input("trace_out_rewrite: qubit " + std::to_string(u) +
                        " is not an output");
  Pattern out = pat;
  out.outputs.remove(u);
  out.measurements[u] = Measurement{MeasBasis::Z, 0.0};
  out.order.insert(out.order.begin(), u);
  for (auto& [src, targets] : out.x_corrections) targets.remove(u);
  for (auto& [src, targets] : out.z_corrections) targets.remove(u);
  out.z_corrections[u] = out.z_corrections.count(u)
                             ? (out.z_corrections[u] | pat.graph.neighbours(u))
                             : pat.graph.neighbours(u);
  return out;
}

namespace {

std::vector<int> derive_order(const Pattern& pat) {
  // Topological order of the signal-dependency relation, lowest vertex first.
  const VertexSet meas = pat.measured();
  std::vector<int> verts = meas.to_vector();
  std::map<int, VertexSet> preds;  // v -> sources that must precede v
  for (int v : verts) preds[v] = VertexSet{};
  auto feed = [&](const std::map<int, VertexSet>& corr) {
    for (const auto& [src, targets] : corr)
      for (int t : targets.to_vector())
        if (meas.contains(t)) preds[t].add(src);
  };
  feed(pat.x_corrections);
  feed(pat.z_corrections);

  std::vector<int> order;
  VertexSet done;
  while (order.size() < verts.size()) {
    int pick = -1;
    for (int v : verts) {
      if (done.contains(v)) continue;
      if (preds[v].minus(done).empty()) {
        pick = v;
        break;
      }
    }
    if (pick < 0)
      throw invalid_input("pattern: cyclic signal dependencies, no valid order");
    order.push_back(pick);
    done.add(pick);
  }
  return order;
}

}  // namespace

Pattern pattern_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input(std::string("pattern JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw invalid_input("pattern JSON must be an object with integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxVertices) throw invalid_input("pattern JSON: n out of range");

  Pattern pat;
  pat.graph = Graph(n);
  if (j.contains("edges"))
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw invalid_input("pattern JSON: bad edge entry");
      pat.graph.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  auto read_set = [&](const char* key) {
    VertexSet s;
    if (!j.contains(key)) return s;
    for (const auto& v : j[key]) {
      const int id = v.get<int>();
      pat.graph.check_vertex(id);
      s.add(id);
    }
    return s;
  };
  pat.inputs = read_set("inputs");
  pat.outputs = read_set("outputs");

  if (j.contains("angles"))
    for (const auto& [key, val] : j["angles"].items()) {
      const int v = std::stoi(key);
      pat.graph.check_vertex(v);
      pat.measurements[v] = Measurement{MeasBasis::XY, val.get<double>()};
    }
  if (j.contains("z_measured"))
    for (const auto& v : j["z_measured"]) {
      pat.graph.check_vertex(v.get<int>());
      pat.measurements[v.get<int>()] = Measurement{MeasBasis::Z, 0.0};
    }

  auto read_corr = [&](const char* key) {
    std::map<int, VertexSet> corr;
    if (!j.contains(key)) return corr;
    for (const auto& [src, targets] : j[key].items()) {
      const int s = std::stoi(src);
      pat.graph.check_vertex(s);
      VertexSet t;
      for (const auto& v : targets) {
        pat.graph.check_vertex(v.get<int>());
        t.add(v.get<int>());
      }
      corr[s] = t;
    }
    return corr;
  };
  pat.x_corrections = read_corr("x_corrections");
  pat.z_corrections = read_corr("z_corrections");

  pat.order = derive_order(pat);
  pat.validate();
  return pat;
}

std::string pattern_to_json(const Pattern& pat) {
  nlohmann::ordered_json j;
  j["n"] = pat.graph.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : pat.graph.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  j["inputs"] = pat.inputs.to_vector();
  j["outputs"] = pat.outputs.to_vector();
  nlohmann::ordered_json angles = nlohmann::ordered_json::object();
  std::vector<int> z_measured;
  for (int v : pat.order) {
    const Measurement& m = pat.measurements.at(v);
    if (m.basis == MeasBasis::XY)
      angles[std::to_string(v)] = m.angle;
    else
      z_measured.push_back(v);
  }
  j["angles"] = angles;
  auto corr_obj = [](const std::map<int, VertexSet>& corr) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [src, targets] : corr)
      if (!targets.empty()) o[std::to_string(src)] = targets.to_vector();
    return o;
  };
  j["x_corrections"] = corr_obj(pat.x_corrections);
  j["z_corrections"] = corr_obj(pat.z_corrections);
  if (!z_measured.empty()) j["z_measured"] = z_measured;
  return j.dump();
}

}  // namespace gssa
