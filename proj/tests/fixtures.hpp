#ifndef SEMISPACE_TESTS_FIXTURES_HPP
#define SEMISPACE_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "semispace/linalg.hpp"
#include "semispace/lp.hpp"
#include "semispace/matroid.hpp"
#include "semispace/rational.hpp"

namespace fixtures {

inline semispace::QMatrix mat_from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<semispace::QVector> qrows;
  for (const auto& r : rows) qrows.push_back(semispace::qvec_from_ints(r));
  return semispace::QMatrix(std::move(qrows));
}

// The 3×5 rank-3 matrix whose column matroid has circuits {124, 135, 2345}.
inline semispace::QMatrix ex42_matrix() {
  return mat_from_ints({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}});
}

// Vandermonde rows on distinct positive nodes: every maximal minor is
// nonzero, so the column matroid is uniform U_{d,n}.
inline semispace::QMatrix vandermonde_matrix(int d, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<long> nodes;
  while (static_cast<int>(nodes.size()) < n) {
    long candidate = 1 + static_cast<long>(rng() % 50);
    bool fresh = true;
    for (long existing : nodes) fresh = fresh && existing != candidate;
    if (fresh) nodes.push_back(candidate);
  }
  std::vector<std::vector<long>> rows(d, std::vector<long>(n));
  for (int j = 0; j < n; ++j) {
    long power = 1;
    for (int i = 0; i < d; ++i) {
      rows[i][j] = power;
      power *= nodes[j];
    }
  }
  return mat_from_ints(rows);
}

inline semispace::QMatrix random_matrix(int rows, int cols, std::uint64_t seed,
                                        long lo = -5, long hi = 5) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<long>> data(rows, std::vector<long>(cols));
  for (auto& r : data) {
    for (auto& x : r) x = lo + static_cast<long>(rng() % (hi - lo + 1));
  }
  return mat_from_ints(data);
}

inline semispace::QVector random_distinct_weights(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<long> w(n);
  for (;;) {
    for (auto& x : w) x = 1 + static_cast<long>(rng() % 1000);
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (w[i] == w[j]) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) return semispace::qvec_from_ints(w);
  }
}

// ---------------------------------------------------------------------------
// Fourier–Motzkin feasibility, the independent desk-scale oracle for the
// exact simplex. Handles mixed strict/weak constraints over the rationals.
// ---------------------------------------------------------------------------

struct FmConstraint {
  semispace::QVector a;
  semispace::BigRational b;  // a·x ≥ b (or > b when strict)
  bool strict = false;
};

inline bool fm_feasible(std::vector<FmConstraint> cons, int dim) {
  using semispace::BigRational;
  for (int var = dim - 1; var >= 0; --var) {
    std::vector<FmConstraint> lows, ups, rest;
    for (auto& c : cons) {
      if (c.a[var] > 0) {
        lows.push_back(std::move(c));
      } else if (c.a[var] < 0) {
        ups.push_back(std::move(c));
      } else {
        rest.push_back(std::move(c));
      }
    }
    for (const auto& lo : lows) {
      for (const auto& up : ups) {
        FmConstraint combined;
        combined.a.assign(dim, BigRational(0));
        const BigRational scale_lo = -up.a[var];  // > 0
        const BigRational scale_up = lo.a[var];   // > 0
        for (int j = 0; j < dim; ++j) {
          combined.a[j] = scale_lo * lo.a[j] + scale_up * up.a[j];
        }
        combined.b = scale_lo * lo.b + scale_up * up.b;
        combined.strict = lo.strict || up.strict;
        rest.push_back(std::move(combined));
      }
    }
    cons = std::move(rest);
  }
  for (const auto& c : cons) {
    if (c.strict ? !(0 > c.b) : !(0 >= c.b)) return false;
  }
  return true;
}

inline bool fm_feasible_system(const semispace::LinearSystem& sys) {
  std::vector<FmConstraint> cons;
  const int dim = sys.dimension();
  for (const auto& [a, b] : sys.equalities) {
    cons.push_back({a, b, false});
    semispace::QVector na = a;
    for (auto& x : na) x = -x;
    cons.push_back({na, -b, false});
  }
  for (const auto& [a, b] : sys.weak) cons.push_back({a, b, false});
  for (const auto& [a, b] : sys.strict) cons.push_back({a, b, true});
  return fm_feasible(std::move(cons), dim);
}

}  // namespace fixtures

#endif
