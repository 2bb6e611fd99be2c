#include "gssa.h"

#include <cstring>
#include <new>
#include <string>

#include "access.hpp"
#include "gflow.hpp"
#include "graph.hpp"
#include "json.hpp"
#include "pattern.hpp"
#include "pointless.hpp"
#include "quantum.hpp"
#include "sweep.hpp"

struct gssa_protocol {
  gssa::Protocol p;
};
struct gssa_pattern {
  gssa::Pattern p;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

template <typename F>
gssa_status guarded(char** err, F&& f) {
  try {
    return f();
  } catch (const gssa::consistency_violation& e) {
    set_err(err, e.what());
    return GSSA_ERR_CONSISTENCY;
  } catch (const gssa::limit_exceeded& e) {
    set_err(err, e.what());
    return GSSA_ERR_LIMIT;
  } catch (const gssa::invalid_input& e) {
    set_err(err, e.what());
    return GSSA_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return GSSA_ERR_INTERNAL;
  }
}

gssa::VertexSet set_from_ids(const gssa::Graph& g, const uint32_t* ids, size_t count) {
  gssa::VertexSet s;
  for (size_t i = 0; i < count; ++i) {
    g.check_vertex(static_cast<int>(ids[i]));
    s.add(static_cast<int>(ids[i]));
  }
  return s;
}

}  // namespace

extern "C" {

const char* gssa_version(void) { return "1.0.0"; }

void gssa_string_free(char* s) { delete[] s; }

gssa_status gssa_protocol_parse(const char* json_text, gssa_protocol** out, char** err) {
  if (!json_text || !out) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    auto* h = new gssa_protocol{gssa::protocol_from_json(json_text)};
    *out = h;
    return GSSA_OK;
  });
}

gssa_status gssa_protocol_generate(const char* family, uint32_t n, gssa_protocol** out,
                                   char** err) {
  if (!family || !out) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    gssa::Graph g = gssa::families::generate(family, static_cast<int>(n));
    auto* h = new gssa_protocol{
        gssa::Protocol{g, gssa::VertexSet::full(g.vertex_count())}};
    *out = h;
    return GSSA_OK;
  });
}

gssa_status gssa_protocol_set_encoding(gssa_protocol* p, const uint32_t* ids,
                                       size_t count, char** err) {
  if (!p) {
    set_err(err, "null protocol");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    p->p.encoding = set_from_ids(p->p.graph, ids, count);
    return GSSA_OK;
  });
}

gssa_status gssa_protocol_to_json(const gssa_protocol* p, char** out) {
  if (!p || !out) return GSSA_ERR_INVALID_ARGUMENT;
  *out = dup_string(gssa::protocol_to_json(p->p));
  return GSSA_OK;
}

uint32_t gssa_protocol_vertex_count(const gssa_protocol* p) {
  return p ? static_cast<uint32_t>(p->p.graph.vertex_count()) : 0;
}

void gssa_protocol_free(gssa_protocol* p) { delete p; }

gssa_status gssa_protocol_conjugate(const gssa_protocol* p, const uint32_t* set_ids,
                                    size_t count, gssa_protocol** out, char** err) {
  if (!p || !out) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    const gssa::VertexSet a =
        set_ids ? set_from_ids(p->p.graph, set_ids, count) : p->p.encoding;
    auto* h = new gssa_protocol{gssa::Protocol{p->p.graph.conjugate(a), p->p.encoding}};
    *out = h;
    return GSSA_OK;
  });
}

gssa_status gssa_decide_cc(const gssa_protocol* p, const uint32_t* set_ids, size_t count,
                           char** result_json, char** err) {
  if (!p || !result_json) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    const gssa::VertexSet s = set_from_ids(p->p.graph, set_ids, count);
    const gssa::AccessVerdict v = gssa::decide(p->p, s);
    nlohmann::ordered_json j;
    j["verdict"] = v.status == gssa::CCStatus::accessible ? "accessible" : "blocked";
    j["witness"] = v.witness.to_vector();
    *result_json = dup_string(j.dump());
    return GSSA_OK;
  });
}

gssa_status gssa_decide_qq(const gssa_protocol* p, const uint32_t* set_ids, size_t count,
                           char** result_json, char** err) {
  if (!p || !result_json) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    const gssa::VertexSet s = set_from_ids(p->p.graph, set_ids, count);
    const gssa::QQVerdict q = gssa::qq_access(p->p, s);
    nlohmann::ordered_json j;
    j["verdict"] = q == gssa::QQVerdict::yes
                       ? "yes"
                       : (q == gssa::QQVerdict::no ? "no" : "undetermined");
    const gssa::AccessVerdict base = gssa::decide(p->p, s);
    j["witness"] = base.witness.to_vector();
    if (q != gssa::QQVerdict::no) {
      const gssa::Protocol conj{p->p.graph.conjugate(p->p.encoding), p->p.encoding};
      j["conjugate_witness"] = gssa::decide(conj, s).witness.to_vector();
    }
    *result_json = dup_string(j.dump());
    return GSSA_OK;
  });
}

gssa_status gssa_oracle_check(const gssa_protocol* p, const uint32_t* set_ids,
                              size_t count, char** result_json, char** err) {
  if (!p || !result_json) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    const gssa::VertexSet s = set_from_ids(p->p.graph, set_ids, count);
    const gssa::PrivacyVerdict v = gssa::privacy_check(p->p, s);
    nlohmann::ordered_json j;
    j["verdict"] = v == gssa::PrivacyVerdict::private_from
                       ? "private"
                       : (v == gssa::PrivacyVerdict::accessible ? "accessible" : "neither");
    *result_json = dup_string(j.dump());
    return GSSA_OK;
  });
}

gssa_status gssa_analyze(const gssa_protocol* p, uint32_t max_n, char** report_json,
                         char** err) {
  if (!p || !report_json) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    const gssa::AccessStructure st =
        gssa::enumerate_access_structure(p->p, static_cast<int>(max_n));
    const gssa::ThresholdReport tr = gssa::threshold_report(st);
    const auto lemmas = gssa::check_bound_lemmas(p->p, tr);
    *report_json = dup_string(gssa::access_report_json(p->p, st, tr, lemmas));
    return GSSA_OK;
  });
}

gssa_status gssa_thresholds(const gssa_protocol* p, uint32_t max_n, char** report_json,
                            char** err) {
  if (!p || !report_json) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    const gssa::ThresholdReport tr =
        gssa::threshold_report(p->p, static_cast<int>(max_n));
    const auto lemmas = gssa::check_bound_lemmas(p->p, tr);
    nlohmann::ordered_json j;
    j["n"] = tr.n;
    if (tr.k_access)
      j["k_access"] = *tr.k_access;
    else
      j["k_access"] = nullptr;
    j["k_privacy"] = tr.k_privacy;
    j["is_threshold"] = tr.is_threshold;
    if (tr.k)
      j["k"] = *tr.k;
    else
      j["k"] = nullptr;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : lemmas) {
      nlohmann::ordered_json e;
      e["lemma"] = c.id;
      e["holds"] = c.holds;
      if (!c.detail.empty()) e["detail"] = c.detail;
      checks.push_back(e);
    }
    j["lemma_checks"] = checks;
    *report_json = dup_string(j.dump());
    return GSSA_OK;
  });
}

gssa_status gssa_pattern_parse(const char* json_text, gssa_pattern** out, char** err) {
  if (!json_text || !out) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    auto* h = new gssa_pattern{gssa::pattern_from_json(json_text)};
    *out = h;
    return GSSA_OK;
  });
}

gssa_status gssa_pattern_to_json(const gssa_pattern* p, char** out) {
  if (!p || !out) return GSSA_ERR_INVALID_ARGUMENT;
  *out = dup_string(gssa::pattern_to_json(p->p));
  return GSSA_OK;
}

void gssa_pattern_free(gssa_pattern* p) { delete p; }

gssa_status gssa_find_gflow(const gssa_pattern* p, char** result_json, char** err) {
  if (!p || !result_json) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    const auto flow = gssa::find_gflow(p->p.graph, p->p.inputs, p->p.outputs);
    nlohmann::ordered_json j;
    j["exists"] = flow.has_value();
    if (flow) {
      nlohmann::ordered_json g = nlohmann::ordered_json::object();
      for (const auto& [v, k] : flow->g) g[std::to_string(v)] = k.to_vector();
      j["g"] = g;
      nlohmann::ordered_json layers = nlohmann::ordered_json::object();
      for (const auto& [v, l] : flow->layer) layers[std::to_string(v)] = l;
      j["layers"] = layers;
    }
    *result_json = dup_string(j.dump());
    return GSSA_OK;
  });
}

gssa_status gssa_verify_gflow(const gssa_pattern* p, const char* gflow_json,
                              char** result_json, char** err) {
  if (!p || !gflow_json || !result_json) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(gflow_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw gssa::invalid_input(std::string("gflow JSON parse error: ") + e.what());
    }
    gssa::GFlow flow;
    if (j.contains("g"))
      for (const auto& [key, val] : j["g"].items()) {
        gssa::VertexSet k;
        for (const auto& t : val) k.add(t.get<int>());
        flow.g[std::stoi(key)] = k;
      }
    if (j.contains("layers"))
      for (const auto& [key, val] : j["layers"].items())
        flow.layer[std::stoi(key)] = val.get<int>();
    const gssa::GFlowCheck chk =
        gssa::verify_gflow(p->p.graph, p->p.inputs, p->p.outputs, flow);
    nlohmann::ordered_json out;
    out["valid"] = chk.ok;
    out["vertex"] = chk.vertex;
    out["violated_condition"] = chk.condition;
    out["message"] = chk.message;
    *result_json = dup_string(out.dump());
    return GSSA_OK;
  });
}

gssa_status gssa_pointless_check(const gssa_pattern* p, uint32_t qubit,
                                 int with_semantic, char** result_json, char** err) {
  if (!p || !result_json) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    const int u = static_cast<int>(qubit);
    p->p.graph.check_vertex(u);
    if (p->p.inputs.contains(u) || p->p.outputs.contains(u))
      throw gssa::invalid_input("pointless check: qubit must be measured and not an input");
    const gssa::Theorem4Report t4 = gssa::theorem4_check(p->p, u);
    nlohmann::ordered_json j;
    j["qubit"] = u;
    if (with_semantic) j["semantic"] = gssa::is_pointless_semantic(p->p, u);
    j["condition_a"] = t4.condition_a;
    j["condition_b"] = t4.condition_b;
    j["structural"] = t4.structural_pointless;
    j["witness"] = t4.witness.to_vector();
    *result_json = dup_string(j.dump());
    return GSSA_OK;
  });
}

gssa_status gssa_verify_suite(uint32_t max_n, int workers, int inject_fault,
                              char** summary_json, char** err) {
  if (!summary_json) {
    set_err(err, "null argument");
    return GSSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(err, [&] {
    gssa::sweep::SuiteOptions opt;
    opt.max_n = static_cast<int>(max_n);
    opt.workers = workers;
    opt.inject_fault = inject_fault != 0;
    opt.random_pairs = 100;  // pairs per n above the exhaustive range
    const gssa::sweep::SuiteReport rep = gssa::sweep::run_verify_suite(opt);
    *summary_json = dup_string(rep.to_json());
    return rep.ok() ? GSSA_OK : GSSA_ERR_CONSISTENCY;
  });
}

}  // extern "C"
