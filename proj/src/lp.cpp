#include "semispace/lp.hpp"

#include <cstddef>

#include "semispace/errors.hpp"

namespace semispace {

int LinearSystem::dimension() const {
  if (!equalities.empty()) return static_cast<int>(equalities[0].first.size());
  if (!weak.empty()) return static_cast<int>(weak[0].first.size());
  if (!strict.empty()) return static_cast<int>(strict[0].first.size());
  return 0;
}

LinearSystem& LinearSystem::add_eq(QVector a, BigRational b) {
  equalities.emplace_back(std::move(a), std::move(b));
  return *this;
}
LinearSystem& LinearSystem::add_ge(QVector a, BigRational b) {
  weak.emplace_back(std::move(a), std::move(b));
  return *this;
}
LinearSystem& LinearSystem::add_gt(QVector a, BigRational b) {
  strict.emplace_back(std::move(a), std::move(b));
  return *this;
}

bool LinearSystem::satisfied_by(const QVector& x) const {
  for (const auto& [a, b] : equalities) {
    if (dot(a, x) != b) return false;
  }
  for (const auto& [a, b] : weak) {
    if (dot(a, x) < b) return false;
  }
  for (const auto& [a, b] : strict) {
    if (dot(a, x) <= b) return false;
  }
  return true;
}

namespace {

// Dense tableau simplex in standard form: max c·z s.t. A z = rhs, z ≥ 0.
// Bland's rule throughout, so the loop always terminates.
struct Tableau {
  std::vector<QVector> row;  // m rows of length ncols + 1 (last entry = rhs)
  QVector cost;              // reduced costs, length ncols + 1 (last = value)
  std::vector<int> basis;    // basic column per row
  int ncols = 0;

  int rhs_col() const { return ncols; }

  void pivot(int pr, int pc) {
    const BigRational inv = 1 / row[pr][pc];
    for (auto& v : row[pr]) v *= inv;
    for (std::size_t r = 0; r < row.size(); ++r) {
      if (static_cast<int>(r) == pr || row[r][pc] == 0) continue;
      const BigRational f = row[r][pc];
      for (int c = 0; c <= ncols; ++c) row[r][c] -= f * row[pr][c];
    }
    if (cost[pc] != 0) {
      const BigRational f = cost[pc];
      for (int c = 0; c <= ncols; ++c) cost[c] -= f * row[pr][c];
    }
    basis[pr] = pc;
  }

  // Runs Bland's-rule pivoting until optimal. `allowed` masks columns that
  // may enter the basis. Returns false on unboundedness.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        if (allowed[j] && cost[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      BigRational best_ratio = 0;
      for (std::size_t r = 0; r < row.size(); ++r) {
        if (row[r][enter] <= 0) continue;
        BigRational ratio = row[r][rhs_col()] / row[r][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {
          leave = static_cast<int>(r);
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

struct StandardForm {
  std::vector<QVector> a;  // m x nvars
  QVector rhs;             // m, will be normalized to rhs ≥ 0
  QVector objective;       // nvars
  int nvars = 0;
};

// Solves max c·z, A z = rhs, z ≥ 0 by the two-phase method. Returns the
// optimal z, or nullopt when infeasible. The problems built below are always
// bounded, so phase-2 unboundedness is reported as an internal error.
std::optional<QVector> solve_standard_form(const StandardForm& sf) {
  const int m = static_cast<int>(sf.a.size());
  const int n = sf.nvars;
  const int total = n + m;  // artificials appended at columns n..n+m-1

  Tableau t;
  t.ncols = total;
  t.basis.resize(m);
  t.row.assign(m, QVector(total + 1, BigRational(0)));
  for (int i = 0; i < m; ++i) {
    const bool flip = sf.rhs[i] < 0;
    for (int j = 0; j < n; ++j) t.row[i][j] = flip ? -sf.a[i][j] : sf.a[i][j];
    t.row[i][total] = flip ? -sf.rhs[i] : sf.rhs[i];
    t.row[i][n + i] = 1;
    t.basis[i] = n + i;
  }

  // Phase 1: max −Σ artificials. Reduced costs start consistent with the
  // all-artificial basis.
  t.cost.assign(total + 1, BigRational(0));
  for (int j = n; j < total; ++j) t.cost[j] = -1;
  for (int i = 0; i < m; ++i) {
    for (int c = 0; c <= total; ++c) t.cost[c] += t.row[i][c];
  }
  std::vector<bool> allow_all(total, true);
  if (!t.optimize(allow_all)) return std::nullopt;
  if (t.cost[total] != 0) return std::nullopt;  // Σ artificials > 0: infeasible

  // Drive any degenerate artificials out of the basis. A row that cannot be
  // pivoted to a structural column is 0 = 0 and is dropped outright, so no
  // artificial stays basic into phase 2 (where later pivots could lift it
  // off zero again).
  for (int i = static_cast<int>(t.row.size()) - 1; i >= 0; --i) {
    if (t.basis[i] < n) continue;
    bool pivoted = false;
    for (int j = 0; j < n; ++j) {
      if (t.row[i][j] != 0) {
        t.pivot(i, j);
        pivoted = true;
        break;
      }
    }
    if (!pivoted) {
      t.row.erase(t.row.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }

  // Phase 2: real objective, artificials locked out.
  t.cost.assign(total + 1, BigRational(0));
  for (int j = 0; j < n; ++j) t.cost[j] = sf.objective[j];
  for (std::size_t i = 0; i < t.row.size(); ++i) {
    if (t.cost[t.basis[i]] == 0) continue;
    const BigRational f = t.cost[t.basis[i]];
    for (int c = 0; c <= total; ++c) t.cost[c] -= f * t.row[i][c];
  }
  std::vector<bool> allow_structural(total, false);
  for (int j = 0; j < n; ++j) allow_structural[j] = true;
  if (!t.optimize(allow_structural)) {
    throw ConsistencyError("internal LP unexpectedly unbounded");
  }

  QVector z(n, BigRational(0));
  for (std::size_t i = 0; i < t.row.size(); ++i) {
    if (t.basis[i] < n) z[t.basis[i]] = t.row[i][t.rhs_col()];
  }
  return z;
}

}  // namespace

std::optional<QVector> lp_feasible(const LinearSystem& sys) {
  const int n = sys.dimension();
  for (const auto* group : {&sys.equalities, &sys.weak, &sys.strict}) {
    for (const auto& [a, b] : *group) {
      if (static_cast<int>(a.size()) != n) {
        throw InputError("inconsistent constraint dimensions in linear system");
      }
    }
  }

  if (n == 0) {
    QVector empty;
    return sys.satisfied_by(empty) ? std::optional<QVector>(empty) : std::nullopt;
  }

  // Free x is split as x = p − q with p, q ≥ 0. One bounded slack variable t
  // turns every strict constraint into a·x ≥ b + t; the system is strictly
  // feasible iff max t > 0.
  const bool has_strict = !sys.strict.empty();
  const int m_ineq = static_cast<int>(sys.weak.size() + sys.strict.size());
  const int col_t = 2 * n;
  const int first_surplus = col_t + (has_strict ? 1 : 0);
  const int nvars = first_surplus + m_ineq + (has_strict ? 1 : 0);

  StandardForm sf;
  sf.nvars = nvars;
  sf.objective.assign(nvars, BigRational(0));
  if (has_strict) sf.objective[col_t] = 1;

  auto push_row = [&](const QVector& a, const BigRational& b, int surplus, bool strict) {
    QVector row(nvars, BigRational(0));
    for (int j = 0; j < n; ++j) {
      row[j] = a[j];
      row[n + j] = -a[j];
    }
    if (strict) row[col_t] = -1;
    if (surplus >= 0) row[first_surplus + surplus] = -1;
    sf.a.push_back(std::move(row));
    sf.rhs.push_back(b);
  };

  for (const auto& [a, b] : sys.equalities) push_row(a, b, -1, false);
  int surplus = 0;
  for (const auto& [a, b] : sys.weak) push_row(a, b, surplus++, false);
  for (const auto& [a, b] : sys.strict) push_row(a, b, surplus++, true);
  if (has_strict) {
    // t + s = 1 keeps the slack maximization bounded.
    QVector row(nvars, BigRational(0));
    row[col_t] = 1;
    row[nvars - 1] = 1;
    sf.a.push_back(std::move(row));
    sf.rhs.push_back(1);
  }

  auto z = solve_standard_form(sf);
  if (!z) return std::nullopt;
  if (has_strict && (*z)[col_t] <= 0) return std::nullopt;

  QVector x(n);
  for (int j = 0; j < n; ++j) x[j] = (*z)[j] - (*z)[n + j];
  if (!sys.satisfied_by(x)) {
    throw ConsistencyError("LP witness failed exact substitution check");
  }
  return x;
}

}  // namespace semispace
