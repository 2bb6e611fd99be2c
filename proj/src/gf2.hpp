#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace gssa {
namespace gf2 {

/// Boolean matrix with at most 64 columns, one machine word per row.
/// Row count is unbounded (constraint systems stack several row blocks).
struct Matrix {
  int cols = 0;
  std::vector<std::uint64_t> rows;

  void add_row(std::uint64_t r) { rows.push_back(r); }
  int row_count() const { return static_cast<int>(rows.size()); }

  /// y = M·x over GF(2), returned as one bit per row (row i -> bit i of
  /// word i/64 — callers here always have <= 64 unknowns but may have
  /// more rows, so the result is a vector of words).
  std::vector<std::uint64_t> multiply(std::uint64_t x) const;
};

/// Full solution set of M·x = rhs: a particular solution (when consistent)
/// plus an independent kernel basis; the set is particular ^ span(basis).
struct AffineSolution {
  int cols = 0;
  std::optional<std::uint64_t> particular;
  std::vector<std::uint64_t> basis;

  bool consistent() const { return particular.has_value(); }
  int kernel_dim() const { return static_cast<int>(basis.size()); }
};

int rank(Matrix m);

/// Gaussian elimination with leftmost-lowest-index pivoting; the particular
/// solution sets all free variables to zero, so output is deterministic.
/// rhs carries one bit per row packed little-endian into words.
AffineSolution solve_affine(const Matrix& m, const std::vector<std::uint64_t>& rhs);
AffineSolution solve_affine(const Matrix& m, std::uint64_t rhs_bits);

struct Enumeration {
  std::vector<std::uint64_t> solutions;
  bool truncated = false;
};

/// All solutions (particular ^ every basis subset), each exactly once,
/// capped at `cap` entries; `truncated` signals the kernel was bigger.
Enumeration enumerate_solutions(const AffineSolution& s, std::size_t cap);

}  // namespace gf2
}  // namespace gssa
