// Command-line front end. Everything goes through the shared library's C
// API (gssa.h); this translation unit never touches the C++ core directly.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gssa.h"
#include "json.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInvalidInput = 2, kConsistency = 3 };

int exit_code_for(gssa_status st) {
  switch (st) {
    case GSSA_OK: return kOk;
    case GSSA_ERR_INVALID_ARGUMENT:
    case GSSA_ERR_LIMIT: return kInvalidInput;
    default: return kConsistency;
  }
}

[[noreturn]] void fail(gssa_status st, char* err) {
  std::string msg = err ? err : "unknown error";
  gssa_string_free(err);
  std::cerr << "error: " << msg << "\n";
  std::exit(exit_code_for(st));
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(kInvalidInput);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ProtocolHandle {
  gssa_protocol* p = nullptr;
  ~ProtocolHandle() { gssa_protocol_free(p); }
};

struct PatternHandle {
  gssa_pattern* p = nullptr;
  ~PatternHandle() { gssa_pattern_free(p); }
};

ProtocolHandle load_protocol(const std::string& path) {
  ProtocolHandle h;
  char* err = nullptr;
  const gssa_status st = gssa_protocol_parse(slurp(path).c_str(), &h.p, &err);
  if (st != GSSA_OK) fail(st, err);
  return h;
}

PatternHandle load_pattern(const std::string& path) {
  PatternHandle h;
  char* err = nullptr;
  const gssa_status st = gssa_pattern_parse(slurp(path).c_str(), &h.p, &err);
  if (st != GSSA_OK) fail(st, err);
  return h;
}

std::vector<std::uint32_t> parse_ids(const std::vector<int>& raw) {
  std::vector<std::uint32_t> ids;
  for (int v : raw) {
    if (v < 0) {
      std::cerr << "error: negative vertex id " << v << "\n";
      std::exit(kInvalidInput);
    }
    ids.push_back(static_cast<std::uint32_t>(v));
  }
  return ids;
}

void emit(const std::string& json_text, bool text_mode) {
  if (!text_mode) {
    std::cout << json_text << "\n";
    return;
  }
  const auto j = nlohmann::json::parse(json_text);
  if (j.contains("verdict")) {
    std::string v = j["verdict"].get<std::string>();
    if (!v.empty()) v[0] = static_cast<char>(std::toupper(v[0]));
    std::cout << v;
    if (j.contains("witness")) {
      std::cout << " witness={";
      bool first = true;
      for (const auto& id : j["witness"]) {
        if (!first) std::cout << ",";
        std::cout << id.get<int>();
        first = false;
      }
      std::cout << "}";
    }
    std::cout << "\n";
    return;
  }
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-state secret-sharing analyzer"};
  app.require_subcommand(1);
  bool text_mode = false;
  app.add_flag("--text", text_mode, "human-readable output instead of JSON");

  // analyze
  std::string analyze_file;
  auto* analyze = app.add_subcommand("analyze", "enumerate the full access structure");
  analyze->add_option("graph", analyze_file, "graph JSON file (- for stdin)")->required();

  // decide
  std::string decide_file, decide_mode = "cc";
  std::vector<int> decide_set;
  auto* decide = app.add_subcommand("decide", "decide access for one player set");
  decide->add_option("graph", decide_file)->required();
  decide->add_option("--set", decide_set, "player vertex ids")->required();
  decide->add_option("--mode", decide_mode, "cc (classical) or qq (quantum channels)")
      ->check(CLI::IsMember({"cc", "qq"}));

  // oracle
  std::string oracle_file;
  std::vector<int> oracle_set;
  auto* oracle = app.add_subcommand("oracle", "dense quantum privacy/accessibility check");
  oracle->add_option("graph", oracle_file)->required();
  oracle->add_option("--set", oracle_set)->required();

  // conjugate
  std::string conj_file;
  std::vector<int> conj_set;
  auto* conj = app.add_subcommand("conjugate", "complement the graph over a vertex set");
  conj->add_option("graph", conj_file)->required();
  conj->add_option("--set", conj_set, "defaults to the encoding set");

  // thresholds
  std::string thr_file;
  auto* thr = app.add_subcommand("thresholds", "threshold classification and bound lemmas");
  thr->add_option("graph", thr_file)->required();

  // gflow
  std::string gflow_file;
  auto* gflow = app.add_subcommand("gflow", "find a gflow for the pattern's (G,I,O)");
  gflow->add_option("pattern", gflow_file)->required();

  // pointless
  std::string pl_file;
  int pl_qubit = -1;
  std::string pl_mode = "both";
  auto* pl = app.add_subcommand("pointless", "pointless-measurement checks");
  pl->add_option("pattern", pl_file)->required();
  pl->add_option("--qubit", pl_qubit, "measured, non-input qubit id")->required();
  pl->add_option("--mode", pl_mode, "semantic, structural, or both")
      ->check(CLI::IsMember({"semantic", "structural", "both"}));

  // gen
  std::string gen_family;
  int gen_n = 0;
  std::vector<int> gen_encoding;
  auto* gen = app.add_subcommand("gen", "emit a named graph family as JSON");
  gen->add_option("family", gen_family,
                  "complete_bipartite | bipartite_minus_matching | torus3x3 | cycle | "
                  "path | complete")
      ->required();
  gen->add_option("--n", gen_n, "size parameter (ignored by torus3x3)");
  gen->add_option("--encoding", gen_encoding, "encoding ids (default: all vertices)");

  // verify-suite
  int vs_max_n = 5;
  bool vs_inject = false;
  auto* vs = app.add_subcommand("verify-suite", "exhaustive property sweep");
  vs->add_option("--max-n", vs_max_n, "largest vertex count (<= 8)");
  vs->add_flag("--inject-fault", vs_inject, "negative control: corrupt one witness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  char* err = nullptr;
  char* out = nullptr;

  if (*analyze) {
    auto h = load_protocol(analyze_file);
    const gssa_status st = gssa_analyze(h.p, 16, &out, &err);
    if (st != GSSA_OK) fail(st, err);
    emit(out, text_mode);
    gssa_string_free(out);
    return kOk;
  }

  if (*decide) {
    auto h = load_protocol(decide_file);
    const auto ids = parse_ids(decide_set);
    const gssa_status st =
        decide_mode == "cc"
            ? gssa_decide_cc(h.p, ids.data(), ids.size(), &out, &err)
            : gssa_decide_qq(h.p, ids.data(), ids.size(), &out, &err);
    if (st != GSSA_OK) fail(st, err);
    emit(out, text_mode);
    gssa_string_free(out);
    return kOk;
  }

  if (*oracle) {
    auto h = load_protocol(oracle_file);
    const auto ids = parse_ids(oracle_set);
    const gssa_status st = gssa_oracle_check(h.p, ids.data(), ids.size(), &out, &err);
    if (st != GSSA_OK) fail(st, err);
    emit(out, text_mode);
    gssa_string_free(out);
    return kOk;
  }

  if (*conj) {
    auto h = load_protocol(conj_file);
    const auto ids = parse_ids(conj_set);
    gssa_protocol* result = nullptr;
    const gssa_status st = gssa_protocol_conjugate(
        h.p, conj->count("--set") ? ids.data() : nullptr, ids.size(), &result, &err);
    if (st != GSSA_OK) fail(st, err);
    const gssa_status st2 = gssa_protocol_to_json(result, &out);
    gssa_protocol_free(result);
    if (st2 != GSSA_OK) fail(st2, nullptr);
    emit(out, text_mode);
    gssa_string_free(out);
    return kOk;
  }

  if (*thr) {
    auto h = load_protocol(thr_file);
    const gssa_status st = gssa_thresholds(h.p, 16, &out, &err);
    if (st != GSSA_OK) fail(st, err);
    emit(out, text_mode);
    gssa_string_free(out);
    return kOk;
  }

  if (*gflow) {
    auto h = load_pattern(gflow_file);
    const gssa_status st = gssa_find_gflow(h.p, &out, &err);
    if (st != GSSA_OK) fail(st, err);
    emit(out, text_mode);
    gssa_string_free(out);
    return kOk;
  }

  if (*pl) {
    auto h = load_pattern(pl_file);
    if (pl_qubit < 0) {
      std::cerr << "error: --qubit must be nonnegative\n";
      return kInvalidInput;
    }
    const int with_semantic = pl_mode != "structural";
    const gssa_status st =
        gssa_pointless_check(h.p, static_cast<std::uint32_t>(pl_qubit), with_semantic,
                             &out, &err);
    if (st != GSSA_OK) fail(st, err);
    emit(out, text_mode);
    gssa_string_free(out);
    return kOk;
  }

  if (*gen) {
    gssa_protocol* p = nullptr;
    gssa_status st =
        gssa_protocol_generate(gen_family.c_str(), static_cast<std::uint32_t>(gen_n), &p,
                               &err);
    if (st != GSSA_OK) fail(st, err);
    if (gen->count("--encoding")) {
      const auto ids = parse_ids(gen_encoding);
      st = gssa_protocol_set_encoding(p, ids.data(), ids.size(), &err);
      if (st != GSSA_OK) {
        gssa_protocol_free(p);
        fail(st, err);
      }
    }
    const gssa_status st2 = gssa_protocol_to_json(p, &out);
    gssa_protocol_free(p);
    if (st2 != GSSA_OK) fail(st2, nullptr);
    emit(out, text_mode);
    gssa_string_free(out);
    return kOk;
  }

  if (*vs) {
    int workers = 1;
    if (const char* w = std::getenv("GSSA_WORKERS")) workers = std::max(1, std::atoi(w));
    const gssa_status st = gssa_verify_suite(static_cast<std::uint32_t>(vs_max_n), workers,
                                             vs_inject ? 1 : 0, &out, &err);
    if (out) {
      emit(out, text_mode);
      gssa_string_free(out);
    }
    if (st != GSSA_OK) {
      if (err) std::cerr << "error: " << err << "\n";
      gssa_string_free(err);
      return exit_code_for(st);
    }
    return kOk;
  }

  return kUsage;
}
