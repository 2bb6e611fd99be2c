#include "quantum.hpp"

#include <cmath>

namespace gssa {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

void check_sim_bound(int n, int bound) {
  if (n > bound)
    throw limit_exceeded("simulation bound exceeded: " + std::to_string(n) +
                         " qubits > " + std::to_string(bound));
}
}  // namespace

StateVector StateVector::zero(int n) {
  StateVector st;
  st.n = n;
  st.amps.assign(std::size_t{1} << n, {0.0, 0.0});
  return st;
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

StateVector build_graph_state(const Graph& g, int sim_bound) {
  const int n = g.vertex_count();
  check_sim_bound(n, sim_bound);
  StateVector st;
  st.n = n;
  const double amp = std::pow(2.0, -n / 2.0);
  st.amps.assign(std::size_t{1} << n, {amp, 0.0});
  for (auto [u, v] : g.edges()) apply_cz(st, u, v);
  return st;
}

StateVector encode_secret(const StateVector& state, VertexSet a, int s) {
  StateVector out = state;
  if (s == 0) return out;
  for (std::size_t x = 0; x < out.amps.size(); ++x)
    if (std::popcount(x & a.bits) & 1) out.amps[x] = -out.amps[x];
  return out;
}

void apply_x(StateVector& st, int qubit) {
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t x = 0; x < st.amps.size(); ++x)
    if (!(x & bit)) std::swap(st.amps[x], st.amps[x | bit]);
}

void apply_z(StateVector& st, int qubit) {
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t x = 0; x < st.amps.size(); ++x)
    if (x & bit) st.amps[x] = -st.amps[x];
}

void apply_cz(StateVector& st, int a, int b) {
  const std::size_t ba = std::size_t{1} << a, bb = std::size_t{1} << b;
  for (std::size_t x = 0; x < st.amps.size(); ++x)
    if ((x & ba) && (x & bb)) st.amps[x] = -st.amps[x];
}

DensityMatrix reduced_density(const StateVector& state, VertexSet s) {
  const int n = state.n;
  if (!s.subset_of(VertexSet::full(n)))
    throw invalid_input("reduced_density: subsystem outside qubit range");
  const std::vector<int> keep = s.to_vector();
  const std::vector<int> drop = s.complement_in(n).to_vector();
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dd = std::size_t{1} << drop.size();

  Eigen::MatrixXcd reshaped(dk, dd);
  reshaped.setZero();
  for (std::size_t x = 0; x < state.amps.size(); ++x) {
    std::size_t rk = 0, rd = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (x & (std::size_t{1} << keep[i])) rk |= std::size_t{1} << i;
    for (std::size_t i = 0; i < drop.size(); ++i)
      if (x & (std::size_t{1} << drop[i])) rd |= std::size_t{1} << i;
    reshaped(rk, rd) = state.amps[x];
  }
  DensityMatrix dm;
  dm.subsystem = s;
  dm.m = reshaped * reshaped.adjoint();
  return dm;
}

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_positive_semidefinite(const Eigen::MatrixXcd& m, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

PrivacyVerdict privacy_check(const Protocol& p, VertexSet s, double tol, int sim_bound) {
  check_sim_bound(p.graph.vertex_count(), sim_bound);
  p.graph.check_subset(s);
  const StateVector g = build_graph_state(p.graph, sim_bound);
  const DensityMatrix r0 = reduced_density(encode_secret(g, p.encoding, 0), s);
  const DensityMatrix r1 = reduced_density(encode_secret(g, p.encoding, 1), s);
  if ((r0.m - r1.m).cwiseAbs().maxCoeff() < tol) return PrivacyVerdict::private_from;
  if (std::abs((r0.m * r1.m).trace()) < tol) return PrivacyVerdict::accessible;
  return PrivacyVerdict::neither;
}

namespace {

// Branch-tree executor. Measured qubits are projected in place (the
// contracted amplitude parks at bit=0 and the qubit is marked dead), so a
// single full-width vector serves the whole tree.
struct BranchSim {
  const Pattern& pat;
  int n;
  std::vector<int> out_vertices;
  std::vector<std::pair<std::uint32_t, Eigen::MatrixXcd>>* branches;
  int column = 0;
  int column_count = 1;
  std::size_t leaf_index = 0;  // DFS leaf order is identical for every column

  void run(std::vector<std::complex<double>>& v, std::size_t depth, std::uint32_t label) {
    if (depth == pat.order.size()) {
      finish(v, label);
      return;
    }
    const int q = pat.order[depth];
    // Pending corrections keyed on earlier outcomes.
    bool flip_x = false, flip_z = false;
    for (const auto& [src, targets] : pat.x_corrections)
      if (targets.contains(q) && signal(label, src, depth)) flip_x = !flip_x;
    for (const auto& [src, targets] : pat.z_corrections)
      if (targets.contains(q) && signal(label, src, depth)) flip_z = !flip_z;
    std::vector<std::complex<double>> w = v;
    if (flip_x) pauli_x(w, q);
    if (flip_z) pauli_z(w, q);

    const Measurement& meas = pat.measurements.at(q);
    for (int outcome = 0; outcome < 2; ++outcome) {
      std::vector<std::complex<double>> proj(w.size(), {0.0, 0.0});
      const std::size_t bit = std::size_t{1} << q;
      if (meas.basis == MeasBasis::Z) {
        for (std::size_t x = 0; x < w.size(); ++x)
          if (!(x & bit)) proj[x] = w[outcome ? (x | bit) : x];
      } else {
        const std::complex<double> phase =
            std::exp(-kI * meas.angle) * (outcome ? -1.0 : 1.0);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (std::size_t x = 0; x < w.size(); ++x)
          if (!(x & bit)) proj[x] = (w[x] + phase * w[x | bit]) * inv_sqrt2;
      }
      run(proj, depth + 1, label | (std::uint32_t{outcome} << depth));
    }
  }

  bool signal(std::uint32_t label, int src, std::size_t depth) const {
    const int pos = pat.order_position(src);
    return pos >= 0 && static_cast<std::size_t>(pos) < depth && ((label >> pos) & 1);
  }

  void pauli_x(std::vector<std::complex<double>>& v, int q) const {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t x = 0; x < v.size(); ++x)
      if (!(x & bit)) std::swap(v[x], v[x | bit]);
  }
  void pauli_z(std::vector<std::complex<double>>& v, int q) const {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t x = 0; x < v.size(); ++x)
      if (x & bit) v[x] = -v[x];
  }

  void finish(std::vector<std::complex<double>>& v, std::uint32_t label) {
    // Late corrections on output qubits.
    for (const auto& [src, targets] : pat.x_corrections)
      if (signal(label, src, pat.order.size()))
        for (int t : targets.to_vector())
          if (pat.outputs.contains(t)) pauli_x(v, t);
    for (const auto& [src, targets] : pat.z_corrections)
      if (signal(label, src, pat.order.size()))
        for (int t : targets.to_vector())
          if (pat.outputs.contains(t)) pauli_z(v, t);

    const Eigen::Index dim_out = Eigen::Index{1} << out_vertices.size();
    if (column == 0)
      branches->emplace_back(label, Eigen::MatrixXcd::Zero(dim_out, column_count));
    Eigen::MatrixXcd& mat = (*branches)[leaf_index].second;
    for (std::size_t xo = 0; xo < (std::size_t{1} << out_vertices.size()); ++xo) {
      std::size_t x = 0;
      for (std::size_t i = 0; i < out_vertices.size(); ++i)
        if (xo & (std::size_t{1} << i)) x |= std::size_t{1} << out_vertices[i];
      mat(static_cast<Eigen::Index>(xo), column) = v[x];
    }
    ++leaf_index;
  }
};

}  // namespace

Channel channel_of(const Pattern& pat, int sim_bound) {
  pat.validate();
  const int n = pat.graph.vertex_count();
  check_sim_bound(n, sim_bound);

  Channel c;
  c.in_vertices = pat.inputs.to_vector();
  c.out_vertices = pat.outputs.to_vector();

  BranchSim sim{pat, n, c.out_vertices, &c.branches};
  sim.column_count = c.dim_in();

  const std::vector<int> rest = pat.inputs.complement_in(n).to_vector();
  for (int ib = 0; ib < c.dim_in(); ++ib) {
    // Inputs carry the basis bits; every other qubit starts in |+>.
    std::vector<std::complex<double>> v(std::size_t{1} << n, {0.0, 0.0});
    const double amp = std::pow(2.0, -static_cast<double>(rest.size()) / 2.0);
    for (std::size_t xr = 0; xr < (std::size_t{1} << rest.size()); ++xr) {
      std::size_t x = 0;
      for (std::size_t i = 0; i < c.in_vertices.size(); ++i)
        if (ib & (1 << i)) x |= std::size_t{1} << c.in_vertices[i];
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (xr & (std::size_t{1} << i)) x |= std::size_t{1} << rest[i];
      v[x] = amp;
    }
    StateVector st;
    st.n = n;
    st.amps = std::move(v);
    for (auto [a, b] : pat.graph.edges()) apply_cz(st, a, b);

    sim.column = ib;
    sim.leaf_index = 0;
    sim.run(st.amps, 0, 0);
  }
  return c;
}

DensityMatrix run_pattern(const Pattern& pat, const Eigen::MatrixXcd& input, int sim_bound) {
  const Channel c = channel_of(pat, sim_bound);
  if (input.rows() != c.dim_in() || input.cols() != c.dim_in())
    throw invalid_input("run_pattern: input dimension does not match |I|");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(c.dim_out(), c.dim_out());
  for (const auto& [label, b] : c.branches) out += b * input * b.adjoint();
  DensityMatrix dm;
  dm.subsystem = VertexSet::from_vector(c.out_vertices);
  dm.m = out;
  return dm;
}

Channel trace_out_qubit(const Channel& c, int vertex) {
  int pos = -1;
  for (std::size_t i = 0; i < c.out_vertices.size(); ++i)
    if (c.out_vertices[i] == vertex) pos = static_cast<int>(i);
  if (pos < 0) throw invalid_input("trace_out_qubit: vertex is not a channel output");

  Channel out;
  out.in_vertices = c.in_vertices;
  for (int v : c.out_vertices)
    if (v != vertex) out.out_vertices.push_back(v);

  const std::size_t dim_new = std::size_t{1} << out.out_vertices.size();
  for (const auto& [label, b] : c.branches) {
    for (int x = 0; x < 2; ++x) {
      Eigen::MatrixXcd nb = Eigen::MatrixXcd::Zero(dim_new, b.cols());
      for (std::size_t row = 0; row < dim_new; ++row) {
        // Re-insert the traced bit at position `pos`.
        const std::size_t low = row & ((std::size_t{1} << pos) - 1);
        const std::size_t high = row >> pos;
        const std::size_t src = low | (static_cast<std::size_t>(x) << pos) | (high << (pos + 1));
        nb.row(row) = b.row(src);
      }
      out.branches.emplace_back((label << 1) | x, std::move(nb));
    }
  }
  return out;
}

Eigen::MatrixXcd completeness_sum(const Channel& c) {
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(c.dim_in(), c.dim_in());
  for (const auto& [label, b] : c.branches) sum += b.adjoint() * b;
  return sum;
}

bool is_trace_preserving(const Channel& c, double tol) {
  const Eigen::MatrixXcd sum = completeness_sum(c);
  return (sum - Eigen::MatrixXcd::Identity(c.dim_in(), c.dim_in())).cwiseAbs().maxCoeff() <=
         tol;
}

Eigen::MatrixXcd choi_matrix(const Channel& c) {
  const int d = c.dim_in() * c.dim_out();
  Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [label, b] : c.branches) {
    Eigen::VectorXcd vec(d);
    for (int col = 0; col < c.dim_in(); ++col)
      vec.segment(static_cast<Eigen::Index>(col) * c.dim_out(), c.dim_out()) = b.col(col);
    choi += vec * vec.adjoint();
  }
  return choi;
}

bool channels_equal(const Channel& a, const Channel& b, double tol) {
  if (a.in_vertices.size() != b.in_vertices.size() ||
      a.out_vertices.size() != b.out_vertices.size())
    throw invalid_input("channels_equal: dimension mismatch");
  return (choi_matrix(a) - choi_matrix(b)).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary_channel(const Channel& c, double tol) {
  if (!is_trace_preserving(c, tol)) return false;
  const Eigen::MatrixXcd choi = choi_matrix(c);
  // Rank one within tolerance: C^2 = tr(C) C for PSD matrices.
  const double scale = std::max(1.0, choi.cwiseAbs().maxCoeff());
  return ((choi * choi - choi.trace() * choi).cwiseAbs().maxCoeff() / (scale * scale)) <=
         1e3 * tol;
}

}  // namespace gssa
