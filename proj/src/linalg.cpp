#include "semispace/linalg.hpp"

#include "semispace/errors.hpp"

namespace semispace {

QMatrix::QMatrix(std::vector<QVector> r) : rows(std::move(r)) {
  for (const auto& row : rows) {
    if (row.size() != rows[0].size()) {
      throw InputError("ragged matrix: all rows must have equal length");
    }
  }
}

QMatrix QMatrix::zero(int r, int c) {
  QMatrix m;
  m.rows.assign(r, QVector(c, BigRational(0)));
  return m;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.rows[i][i] = 1;
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix t = zero(col_count(), row_count());
  for (int i = 0; i < row_count(); ++i) {
    for (int j = 0; j < col_count(); ++j) t.rows[j][i] = rows[i][j];
  }
  return t;
}

QVector QMatrix::column(int c) const {
  QVector v;
  v.reserve(rows.size());
  for (const auto& row : rows) v.push_back(row[c]);
  return v;
}

QMatrix QMatrix::select_columns(const std::vector<int>& cols) const {
  QMatrix m = zero(row_count(), static_cast<int>(cols.size()));
  for (int i = 0; i < row_count(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m.rows[i][j] = rows[i][cols[j]];
  }
  return m;
}

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.matrix = m;
  auto& a = res.matrix.rows;
  const int nr = res.matrix.row_count();
  const int nc = res.matrix.col_count();
  int pivot_row = 0;
  for (int col = 0; col < nc && pivot_row < nr; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < nr; ++r) {
      if (a[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[pivot_row], a[sel]);
    const BigRational inv = 1 / a[pivot_row][col];
    for (int c = col; c < nc; ++c) a[pivot_row][c] *= inv;
    for (int r = 0; r < nr; ++r) {
      if (r == pivot_row || a[r][col] == 0) continue;
      const BigRational factor = a[r][col];
      for (int c = col; c < nc; ++c) a[r][c] -= factor * a[pivot_row][c];
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = static_cast<int>(res.pivot_cols.size());
  return res;
}

int rank(const QMatrix& m) { return rref(m).rank; }

QMatrix kernel_basis(const QMatrix& m) {
  const int nc = m.col_count();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (int p : r.pivot_cols) is_pivot[p] = true;

  QMatrix basis;
  for (int j = 0; j < nc; ++j) {
    if (is_pivot[j]) continue;
    QVector v(nc, BigRational(0));
    v[j] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
      v[r.pivot_cols[i]] = -r.matrix.rows[i][j];
    }
    basis.rows.push_back(std::move(v));
  }
  return basis;
}

QVector mat_vec(const QMatrix& m, const QVector& v) {
  QVector out;
  out.reserve(m.rows.size());
  for (const auto& row : m.rows) out.push_back(dot(row, v));
  return out;
}

QVector vec_mat(const QVector& v, const QMatrix& m) {
  QVector out(m.col_count(), BigRational(0));
  for (int i = 0; i < m.row_count(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.col_count(); ++j) out[j] += v[i] * m.rows[i][j];
  }
  return out;
}

}  // namespace semispace
