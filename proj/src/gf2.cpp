#include "gf2.hpp"

#include <bit>

namespace gssa {
namespace gf2 {

namespace {

struct AugRow {
  std::uint64_t coeffs = 0;
  bool rhs = false;
};

// Row echelon form over the augmented rows, pivoting on the leftmost
// column available and, among rows, the lowest index. Returns pivot
// column per eliminated row.
std::vector<int> eliminate(std::vector<AugRow>& rows, int cols) {
  std::vector<int> pivot_cols;
  std::size_t next_row = 0;
  for (int col = 0; col < cols && next_row < rows.size(); ++col) {
    const std::uint64_t mask = std::uint64_t{1} << col;
    std::size_t pivot = next_row;
    while (pivot < rows.size() && !(rows[pivot].coeffs & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next_row], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next_row && (rows[r].coeffs & mask)) {
        rows[r].coeffs ^= rows[next_row].coeffs;
        rows[r].rhs ^= rows[next_row].rhs;
      }
    }
    pivot_cols.push_back(col);
    ++next_row;
  }
  return pivot_cols;
}

}  // namespace

std::vector<std::uint64_t> Matrix::multiply(std::uint64_t x) const {
  std::vector<std::uint64_t> out((rows.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (std::popcount(rows[i] & x) & 1) out[i / 64] |= std::uint64_t{1} << (i % 64);
  return out;
}

int rank(Matrix m) {
  std::vector<AugRow> rows;
  rows.reserve(m.rows.size());
  for (auto r : m.rows) rows.push_back({r, false});
  return static_cast<int>(eliminate(rows, m.cols).size());
}

AffineSolution solve_affine(const Matrix& m, const std::vector<std::uint64_t>& rhs) {
  if (m.cols < 0 || m.cols > 64) throw invalid_input("gf2: column count out of range");
  const std::size_t words = (m.rows.size() + 63) / 64;
  if (rhs.size() < words && !(m.rows.empty() && rhs.empty()))
    throw invalid_input("gf2: rhs width does not match row count");

  std::vector<AugRow> rows;
  rows.reserve(m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    const bool b = i / 64 < rhs.size() && ((rhs[i / 64] >> (i % 64)) & 1);
    rows.push_back({m.rows[i], b});
  }
  const std::vector<int> pivots = eliminate(rows, m.cols);

  AffineSolution sol;
  sol.cols = m.cols;

  // Inconsistent iff some zero row has rhs 1.
  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (rows[r].rhs) return sol;

  std::uint64_t pivot_mask = 0;
  for (int c : pivots) pivot_mask |= std::uint64_t{1} << c;

  std::uint64_t particular = 0;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (rows[r].rhs) particular |= std::uint64_t{1} << pivots[r];
  sol.particular = particular;

  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (pivot_mask & (std::uint64_t{1} << free_col)) continue;
    std::uint64_t vec = std::uint64_t{1} << free_col;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (rows[r].coeffs & (std::uint64_t{1} << free_col))
        vec |= std::uint64_t{1} << pivots[r];
    sol.basis.push_back(vec);
  }
  return sol;
}

AffineSolution solve_affine(const Matrix& m, std::uint64_t rhs_bits) {
  if (m.rows.size() > 64) throw invalid_input("gf2: packed rhs limited to 64 rows");
  return solve_affine(m, std::vector<std::uint64_t>{rhs_bits});
}

Enumeration enumerate_solutions(const AffineSolution& s, std::size_t cap) {
  Enumeration out;
  if (!s.consistent()) return out;
  const int dim = s.kernel_dim();
  // Gray-code walk: flip one basis vector per step.
  std::uint64_t cur = *s.particular;
  out.solutions.push_back(cur);
  if (dim >= 63 || (std::uint64_t{1} << dim) > cap) out.truncated = true;
  const std::uint64_t total =
      dim >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim);
  for (std::uint64_t i = 1; i < total; ++i) {
    if (out.solutions.size() >= cap) {
      out.truncated = true;
      break;
    }
    cur ^= s.basis[std::countr_zero(i)];
    out.solutions.push_back(cur);
  }
  return out;
}

}  // namespace gf2
}  // namespace gssa
