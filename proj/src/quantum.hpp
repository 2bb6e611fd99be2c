#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "pattern.hpp"

namespace gssa {

inline constexpr int kSimulationBound = 14;
inline constexpr double kEqualityTol = 1e-9;
inline constexpr double kSelfTol = 1e-12;

/// Dense amplitude vector, little-endian qubit ordering:
/// qubit 0 is the least significant bit of the basis index.
struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amps;

  static StateVector zero(int n);
  double norm() const;
};

/// |G> = prod CZ_{u,v} applied to |+>^n. Every amplitude has magnitude
/// 2^{-n/2}; the sign is the parity of edges inside the basis string.
StateVector build_graph_state(const Graph& g, int sim_bound = kSimulationBound);

/// Z_A^s: identity for s=0; for s=1 each basis string x picks up
/// (-1)^{|support(x) ∩ a|}.
StateVector encode_secret(const StateVector& state, VertexSet a, int s);

void apply_x(StateVector& st, int qubit);
void apply_z(StateVector& st, int qubit);
void apply_cz(StateVector& st, int a, int b);

struct DensityMatrix {
  VertexSet subsystem;  // vertex ids, ascending order = qubit index order
  Eigen::MatrixXcd m;
};

/// Partial trace of the pure state onto the qubits in s.
DensityMatrix reduced_density(const StateVector& state, VertexSet s);

bool is_hermitian(const Eigen::MatrixXcd& m, double tol = kSelfTol);
bool is_positive_semidefinite(const Eigen::MatrixXcd& m, double tol = 1e-9);

enum class PrivacyVerdict { private_from, accessible, neither };

/// Ground-truth numerical check: builds Z_A^s|G> for both secrets and
/// compares the reduced states. `private_from` when they are entrywise
/// equal, `accessible` when tr(rho0 rho1) vanishes. `neither` never fires
/// on a graph-state protocol; its absence is itself a tested property.
PrivacyVerdict privacy_check(const Protocol& p, VertexSet s,
                             double tol = kEqualityTol,
                             int sim_bound = kSimulationBound);

/// Branch decomposition of a pattern's semantics: one linear map
/// H_inputs -> H_outputs per measurement-outcome assignment. Branches are
/// intentionally unnormalized; probabilities emerge from the branch sum.
struct Channel {
  std::vector<int> in_vertices;   // ascending vertex ids
  std::vector<int> out_vertices;  // ascending vertex ids
  std::vector<std::pair<std::uint32_t, Eigen::MatrixXcd>> branches;

  int dim_in() const { return 1 << in_vertices.size(); }
  int dim_out() const { return 1 << out_vertices.size(); }
};

Channel channel_of(const Pattern& pat, int sim_bound = kSimulationBound);

/// Applies the channel to a density matrix on the input space.
DensityMatrix run_pattern(const Pattern& pat, const Eigen::MatrixXcd& input,
                          int sim_bound = kSimulationBound);

/// Partial trace of the channel output over one output vertex.
Channel trace_out_qubit(const Channel& c, int vertex);

/// Sum over branches of B^dagger B; equals the identity for a
/// trace-preserving channel.
Eigen::MatrixXcd completeness_sum(const Channel& c);
bool is_trace_preserving(const Channel& c, double tol = kEqualityTol);

Eigen::MatrixXcd choi_matrix(const Channel& c);
bool channels_equal(const Channel& a, const Channel& b, double tol = kEqualityTol);

/// Unitary within tolerance: trace preserving and Choi rank one.
bool is_unitary_channel(const Channel& c, double tol = kEqualityTol);

}  // namespace gssa
