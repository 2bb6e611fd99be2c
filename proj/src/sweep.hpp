#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "access.hpp"
#include "graph.hpp"

namespace gssa {
namespace sweep {

/// Every graph on n <= 6 vertices up to isomorphism (canonical = smallest
/// edge bitmask over all vertex relabelings), optionally connected only.
std::vector<Graph> graphs_up_to_iso(int n, bool connected_only);

/// Reproducible random connected graphs (edge probability 1/2).
std::vector<Graph> random_connected_graphs(int n, int count, std::uint64_t seed);

struct Violation {
  std::string property;
  std::string detail;
  std::string protocol_json;  // offending (G,A), ready to re-run
  std::vector<int> subset;    // offending S when applicable
};

struct PropertyCount {
  long long checked = 0;
  long long failed = 0;
};

struct SuiteReport {
  int max_n = 0;
  long long graphs = 0;
  long long subsets = 0;
  PropertyCount oracle_agreement;   // decide vs quantum privacy check
  PropertyCount dichotomy;          // exactly one witness per subset
  PropertyCount no_neither;         // quantum check never undecided
  PropertyCount monotonicity;       // supersets of accessible sets access
  PropertyCount transversality;     // acc_minimal meets every blk_minimal
  PropertyCount antichain;          // no containment inside either family
  PropertyCount lemma_bounds;       // threshold bound lemmas
  PropertyCount no_2_3_threshold;   // 3-vertex sweep over all encodings
  PropertyCount odd_n_no_go;        // no (n-1,n) with A=V for odd n
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_json() const;
};

struct SuiteOptions {
  int max_n = 5;            // exhaustive iso-class sweep up to here (cap 6)
  int random_pairs = 0;     // extra random (G,A) pairs at n in (6, max_n]
  std::uint64_t seed = 20240915;
  int workers = 1;
  bool inject_fault = false;  // corrupt one witness; the suite must catch it
};

/// The full property sweep: exhaustive oracle agreement, dichotomy,
/// transversality, monotone access, bound lemmas and the two no-go
/// statements, with every counterexample serialized for reproduction.
SuiteReport run_verify_suite(const SuiteOptions& opt);

}  // namespace sweep
}  // namespace gssa
