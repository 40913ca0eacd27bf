#ifndef SEMISPACE_LINALG_HPP
#define SEMISPACE_LINALG_HPP

#include <vector>

#include "semispace/rational.hpp"

namespace semispace {

/**
 * Dense matrix of exact rationals, stored as a list of rows. All linear
 * algebra in the library runs through this type; there is no floating-point
 * fallback.
 */
struct QMatrix {
  std::vector<QVector> rows;

  QMatrix() = default;
  explicit QMatrix(std::vector<QVector> r);

  int row_count() const { return static_cast<int>(rows.size()); }
  int col_count() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }

  static QMatrix zero(int r, int c);
  static QMatrix identity(int n);

  const BigRational& at(int r, int c) const { return rows[r][c]; }
  BigRational& at(int r, int c) { return rows[r][c]; }

  QMatrix transposed() const;
  QVector column(int c) const;

  // Submatrix keeping the given columns, in the given order.
  QMatrix select_columns(const std::vector<int>& cols) const;
};

struct RrefResult {
  QMatrix matrix;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Reduced row echelon form (Gauss-Jordan, exact). Row space is preserved.
RrefResult rref(const QMatrix& m);

int rank(const QMatrix& m);

// Rows of the result form a basis of {v : m v = 0}. Empty matrix (zero rows)
// when the kernel is trivial; column count of the result equals col_count(m).
QMatrix kernel_basis(const QMatrix& m);

// m * v for a column vector v.
QVector mat_vec(const QMatrix& m, const QVector& v);

// vᵀ * m for a row vector v (linear combination of the rows of m).
QVector vec_mat(const QVector& v, const QMatrix& m);

}  // namespace semispace

#endif
