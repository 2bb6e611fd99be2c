#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pattern.hpp"
#include "quantum.hpp"

namespace gssa {

/// The arithmetic-progression index set A_{pq} for an m-qubit pattern with
/// n = |I| = |O|: entries p + k(2^n - 1) for the smallest k reaching
/// (q-1)2^{m-n}+1 and the largest k' staying <= q 2^{m-n}. Indices are
/// 1-based; p, q range over [1, 2^n].
std::vector<long long> index_sets(int m, int n, long long p, long long q);

/// Nonempty S ⊆ V∖(O ∪ {p}) with Odd(S) ⊆ N(p), found as a nonzero kernel
/// vector of the GF(2) system; the returned witness is the deterministic
/// first basis vector. Odd is taken in the full graph, so membership of p
/// itself in Odd(S) is excluded (S must overlap N(p) evenly).
std::optional<VertexSet> theorem4_condition_a(const Graph& graph, VertexSet outputs, int p);

/// All condition-(a) witnesses up to `cap` (kernel enumeration).
std::vector<VertexSet> theorem4_condition_a_all(const Graph& graph, VertexSet outputs,
                                                int p, std::size_t cap = 4096);

/// Phase-sum equality over every index set A_{pq}: the sums of
/// e^{-i Σ α_j x_j} with the angles negated on S must match the originals.
/// `residual` is the pattern without the candidate qubit; requires
/// |I| = |O| and XY measurements on V∖O. Basis strings are enumerated
/// 1-based in ascending binary order, bit j of (x-1) belonging to the j-th
/// vertex in ascending id order.
bool theorem4_condition_b(const Pattern& residual, VertexSet s, double tol = kEqualityTol);

/// The deletion reading of "the measurement at u does not matter":
/// compare the pattern's channel against remove_measurement followed by
/// trace_out_rewrite on u (the definition unwound into executable form).
bool is_pointless_semantic(const Pattern& pat, int u, double tol = kEqualityTol,
                           int sim_bound = kSimulationBound);

/// Builds the residual pattern on graph minus p (vertices renumbered
/// order-preservingly, p's edges dropped, p's measurement and corrections
/// removed). Corrections sourced at p must be absent.
Pattern residual_pattern(const Pattern& pat, int p);

struct Theorem4Report {
  bool condition_a = false;
  VertexSet witness;        // first (a)-witness also passing (b), else first (a)-witness
  bool condition_b = false; // some (a)-witness satisfies (b)
  bool structural_pointless = false;  // condition_a && condition_b
};

/// Sweeps condition-(a) witnesses and tests condition (b) on each.
Theorem4Report theorem4_check(const Pattern& pat, int p, double tol = kEqualityTol);

struct PointlessQubitResult {
  int qubit = -1;
  bool pointless = false;
};

struct Theorem3SubsetReport {
  VertexSet subset;
  bool pattern_supplied = false;
  bool graph_matches = false;
  bool unitary = false;
  std::vector<PointlessQubitResult> excluded;
  bool pass = false;
};

using PatternProvider = std::function<std::optional<Pattern>(VertexSet subset)>;

/// For every |S| = k player subset: ask the provider for a candidate
/// pattern on the protocol graph augmented with a dealer vertex (id n)
/// joined to the encoding set, with the dealer as sole input and a single
/// output inside S; check the channel is unitary and every qubit outside
/// S is semantically pointless. A full pass over all subsets certifies the
/// quantum-channel property.
std::vector<Theorem3SubsetReport> theorem3_check(const Protocol& p, int k,
                                                 const PatternProvider& provider,
                                                 double tol = kEqualityTol);

/// Builds the dealer-augmented graph: original vertices unchanged, dealer
/// appended as vertex n with edges to every encoding vertex.
Graph augment_with_dealer(const Protocol& p);

struct PointlessExtension {
  VertexSet attach;   // neighbourhood chosen for the new qubit
  double angle = 0.0; // measurement angle given to it
  Theorem4Report structural;
  bool semantic = false;
};

/// Sweeps candidate neighbourhoods (and a few angles) for one added
/// measured qubit on top of a base pattern, reporting which extensions
/// leave the computation untouched. Desk-scale search, no optimality
/// claim.
std::vector<PointlessExtension> search_pointless_extensions(const Pattern& base,
                                                            std::size_t max_results = 16);

}  // namespace gssa
