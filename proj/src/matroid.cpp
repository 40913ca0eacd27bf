#include "semispace/matroid.hpp"

#include <algorithm>

#include "semispace/errors.hpp"

namespace semispace {

namespace {

void sort_circuits(std::vector<SmallSet>& circuits) {
  std::sort(circuits.begin(), circuits.end(), [](SmallSet a, SmallSet b) {
    int sa = set_size(a), sb = set_size(b);
    return sa != sb ? sa < sb : a < b;
  });
}

int rank_from_circuits(int n, const std::vector<SmallSet>& circuits, SmallSet within) {
  // Greedy gives a maximal independent subset, and in a matroid all maximal
  // independent subsets of `within` share their size.
  SmallSet indep = 0;
  for (int i = 0; i < n; ++i) {
    if (!set_contains(within, i)) continue;
    SmallSet candidate = set_add(indep, i);
    bool dependent = false;
    for (SmallSet c : circuits) {
      if (set_subset(c, candidate)) {
        dependent = true;
        break;
      }
    }
    if (!dependent) indep = candidate;
  }
  return set_size(indep);
}

}  // namespace

Matroid Matroid::from_circuits(int n, std::vector<SmallSet> circuits) {
  Matroid m;
  m.n = n;
  m.circuits = inclusion_minimal(std::move(circuits));
  sort_circuits(m.circuits);
  m.rank = rank_from_circuits(n, m.circuits, full_set(n));
  return m;
}

Matroid Matroid::uniform(int d, int n) {
  std::vector<SmallSet> circuits;
  if (d < n) {
    for (SmallSet s = 0; s <= full_set(n); ++s) {
      if (set_size(s) == d + 1) circuits.push_back(s);
    }
  }
  return from_circuits(n, std::move(circuits));
}

bool Matroid::is_independent(SmallSet s) const {
  for (SmallSet c : circuits) {
    if (set_subset(c, s)) return false;
  }
  return true;
}

bool Matroid::is_loop(int i) const {
  for (SmallSet c : circuits) {
    if (c == (SmallSet{1} << i)) return true;
  }
  return false;
}

bool Matroid::is_coloop(int i) const {
  for (SmallSet c : circuits) {
    if (set_contains(c, i)) return false;
  }
  return true;
}

SmallSet Matroid::loops() const {
  SmallSet out = 0;
  for (int i = 0; i < n; ++i) {
    if (is_loop(i)) out = set_add(out, i);
  }
  return out;
}

SmallSet Matroid::coloops() const {
  SmallSet out = 0;
  for (int i = 0; i < n; ++i) {
    if (is_coloop(i)) out = set_add(out, i);
  }
  return out;
}

int rank_of(const Matroid& m, SmallSet s) {
  return rank_from_circuits(m.n, m.circuits, s);
}

bool is_flat(const Matroid& m, SmallSet s) {
  const int r = rank_of(m, s);
  for (int i = 0; i < m.n; ++i) {
    if (set_contains(s, i)) continue;
    if (rank_of(m, set_add(s, i)) == r) return false;
  }
  return true;
}

SmallSet lex_smallest_basis(const Matroid& m, const std::vector<int>& order) {
  std::vector<int> ord = order;
  if (ord.empty()) {
    ord.resize(m.n);
    for (int i = 0; i < m.n; ++i) ord[i] = i;
  }
  SmallSet basis = 0;
  for (int i : ord) {
    SmallSet candidate = set_add(basis, i);
    if (m.is_independent(candidate)) basis = candidate;
  }
  return basis;
}

namespace {

Minor relabel(int parent_n, int removed, std::vector<SmallSet> circuits) {
  Minor out;
  out.old_of_new.reserve(parent_n - 1);
  std::vector<int> new_of_old(parent_n, -1);
  for (int i = 0; i < parent_n; ++i) {
    if (i == removed) continue;
    new_of_old[i] = static_cast<int>(out.old_of_new.size());
    out.old_of_new.push_back(i);
  }
  std::vector<SmallSet> relabeled;
  relabeled.reserve(circuits.size());
  for (SmallSet c : circuits) {
    SmallSet r = 0;
    for (int e : set_elements(c)) r = set_add(r, new_of_old[e]);
    relabeled.push_back(r);
  }
  out.matroid = Matroid::from_circuits(parent_n - 1, std::move(relabeled));
  return out;
}

}  // namespace

Minor delete_element(const Matroid& m, int i) {
  std::vector<SmallSet> circuits;
  for (SmallSet c : m.circuits) {
    if (!set_contains(c, i)) circuits.push_back(c);
  }
  return relabel(m.n, i, std::move(circuits));
}

Minor contract_element(const Matroid& m, int i) {
  if (m.is_loop(i)) return delete_element(m, i);
  std::vector<SmallSet> circuits;
  for (SmallSet c : m.circuits) circuits.push_back(set_remove(c, i));
  return relabel(m.n, i, std::move(circuits));
}

Minor restrict_to(const Matroid& m, SmallSet s) {
  Minor out;
  out.matroid = m;
  for (int i = 0; i < m.n; ++i) {
    out.old_of_new.push_back(i);
  }
  // Delete the complement, highest element first so stored old-indices stay valid.
  for (int i = m.n - 1; i >= 0; --i) {
    if (set_contains(s, i)) continue;
    Minor step = delete_element(out.matroid, i);
    std::vector<int> composed;
    composed.reserve(step.old_of_new.size());
    for (int k : step.old_of_new) composed.push_back(out.old_of_new[k]);
    out.matroid = std::move(step.matroid);
    out.old_of_new = std::move(composed);
  }
  return out;
}

Matroid matroid_from_matrix(const QMatrix& a) {
  const int n = a.col_count();
  std::vector<SmallSet> circuits;
  for (int size = 1; size <= n; ++size) {
    for (SmallSet s = 0; s <= full_set(n); ++s) {
      if (set_size(s) != size) continue;
      bool has_smaller = false;
      for (SmallSet c : circuits) {
        if (set_subset(c, s)) {
          has_smaller = true;
          break;
        }
      }
      if (has_smaller) continue;
      // No circuit strictly inside, so s is dependent iff it is itself a circuit.
      if (rank(a.select_columns(set_elements(s))) < size) circuits.push_back(s);
    }
  }
  Matroid m = Matroid::from_circuits(n, std::move(circuits));
  if (m.rank != rank(a)) {
    throw ConsistencyError("matroid rank disagrees with matrix rank");
  }
  return m;
}

std::vector<CircuitForm> circuit_forms(const QMatrix& a, const Matroid& m) {
  std::vector<CircuitForm> out;
  out.reserve(m.circuits.size());
  for (SmallSet c : m.circuits) {
    const auto cols = set_elements(c);
    QMatrix sub = a.select_columns(cols);
    QMatrix ker = kernel_basis(sub);
    if (ker.row_count() != 1) {
      throw ConsistencyError("circuit column set does not have a 1-dimensional kernel");
    }
    QVector coeffs(a.col_count(), BigRational(0));
    for (std::size_t k = 0; k < cols.size(); ++k) coeffs[cols[k]] = ker.rows[0][k];
    for (int e : cols) {
      if (coeffs[e] == 0) {
        throw ConsistencyError("kernel vector support does not match circuit");
      }
    }
    const BigRational lead = coeffs[cols.front()];
    for (auto& x : coeffs) x /= lead;
    out.push_back(CircuitForm{c, std::move(coeffs)});
  }
  return out;
}

}  // namespace semispace
