#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace gssa {

inline constexpr int kDefaultEnumerationBound = 16;

enum class CCStatus { accessible, blocked };

/// Outcome of the exact access dichotomy for one player set S:
/// Accessible carries a set D ⊆ S with D ∪ Odd(D) ⊆ S and |D ∩ A| odd;
/// Blocked carries a set K ⊆ V∖S with Odd(K) ∩ S = A ∩ S.
struct AccessVerdict {
  CCStatus status;
  VertexSet witness;
};

/// Witness search for the accessibility criterion, as an affine GF(2)
/// system over the indicator of D (restricted to S). Returns the
/// deterministic particular solution, or nothing when inconsistent.
std::optional<VertexSet> theorem1_witness(const Protocol& p, VertexSet s);

/// Witness search for the blocking criterion: K ⊆ V∖S with
/// Odd(K) ∩ S = A ∩ S. The empty K is a legal witness (exactly when
/// A ∩ S = ∅). Unlike theorem1_witness this does not require a
/// nonempty encoding.
std::optional<VertexSet> theorem2_witness(const Protocol& p, VertexSet s);

/// Runs both witness searches and demands exactly one succeeds. Both
/// returned witnesses are re-checked against their defining set equations;
/// any disagreement throws consistency_violation (never a user error).
AccessVerdict decide(const Protocol& p, VertexSet s);

/// Post-hoc validation of a verdict's witness equations.
bool validate_verdict(const Protocol& p, VertexSet s, const AccessVerdict& v);

struct AccessStructure {
  int n = 0;
  std::vector<VertexSet> acc_minimal;  // minimal accessing sets
  std::vector<VertexSet> blk_minimal;  // minimal blocking sets
  std::vector<bool> accessible;        // verdict per subset bitmask, size 2^n
};

/// Size-ascending sweep over all 2^n subsets. Supersets of recorded
/// minimal accessing sets are marked accessible without re-solving
/// (access is monotone: a witness D carries over verbatim).
/// Output lists are sorted by (size, bitmask).
AccessStructure enumerate_access_structure(const Protocol& p,
                                           int max_n = kDefaultEnumerationBound);

struct ThresholdReport {
  int n = 0;
  std::optional<int> k_access;  // smallest k with every |S| >= k accessible
  int k_privacy = 0;            // largest k with every |S| < k blocked
  bool is_threshold = false;
  std::optional<int> k;
};

ThresholdReport threshold_report(const AccessStructure& st);
ThresholdReport threshold_report(const Protocol& p,
                                 int max_n = kDefaultEnumerationBound);

enum class QQVerdict { yes, no, undetermined };

/// Lifted verdict for quantum-channel sharing: `yes` when S is accessible
/// for both the graph and its conjugate over A, `no` when S is blocked for
/// the graph itself, and `undetermined` for the accessible-then-blocked
/// combination, about which no positive claim exists.
QQVerdict qq_access(const Protocol& p, VertexSet s);

struct LemmaCheck {
  std::string id;
  bool holds = true;
  std::string detail;
};

/// Bounds every (k,n) threshold must satisfy: |A| >= n-k+1, deg(a) >= k-1
/// for all a in A, and the odd-n exclusion of (n-1,n) schemes with A = V.
/// Vacuously true when the report is not a threshold. A failure here flags
/// an implementation bug, not a property of the input.
std::vector<LemmaCheck> check_bound_lemmas(const Protocol& p, const ThresholdReport& r);

/// Report JSON with fixed key order, suitable for diff-based regression.
std::string access_report_json(const Protocol& p, const AccessStructure& st,
                               const ThresholdReport& tr,
                               const std::vector<LemmaCheck>& lemmas);

}  // namespace gssa
