#ifndef SEMISPACE_MATROID_HPP
#define SEMISPACE_MATROID_HPP

#include <vector>

#include "semispace/linalg.hpp"
#include "semispace/rational.hpp"
#include "semispace/sets.hpp"

namespace semispace {

/**
 * A matroid given by its ground-set size, its full circuit list and its rank.
 * Circuits are stored explicitly; the intended scale is small (n ≤ 9), and
 * everything downstream enumerates them anyway.
 */
struct Matroid {
  int n = 0;
  std::vector<SmallSet> circuits;  // antichain, sorted by (size, mask)
  int rank = 0;

  static Matroid from_circuits(int n, std::vector<SmallSet> circuits);

  // Uniform matroid U_{d,n}: circuits are all (d+1)-subsets.
  static Matroid uniform(int d, int n);

  bool is_independent(SmallSet s) const;
  bool is_loop(int i) const;
  bool is_coloop(int i) const;  // i lies in no circuit
  SmallSet loops() const;
  SmallSet coloops() const;
};

int rank_of(const Matroid& m, SmallSet s);
bool is_flat(const Matroid& m, SmallSet s);

// Lexicographically smallest basis under the order v[0] < v[1] < ... given by
// `order` (defaults to 0 < 1 < ... < n−1 when empty): greedy over the order.
SmallSet lex_smallest_basis(const Matroid& m, const std::vector<int>& order = {});

/**
 * Minor of a matroid together with the element relabeling: element
 * old_of_new[k] of the parent became element k of the minor.
 */
struct Minor {
  Matroid matroid;
  std::vector<int> old_of_new;
};

Minor delete_element(const Matroid& m, int i);
Minor contract_element(const Matroid& m, int i);  // loop: contraction = deletion
Minor restrict_to(const Matroid& m, SmallSet s);

// Column matroid of a matrix: circuits are the inclusion-minimal dependent
// column sets, found by exact rank tests over subsets of increasing size.
Matroid matroid_from_matrix(const QMatrix& a);

/**
 * The unique (up to scale) linear form Σ aᵢxᵢ vanishing on the row span with
 * support exactly one circuit; the lowest-index coefficient is normalized
 * to 1.
 */
struct CircuitForm {
  SmallSet circuit = 0;
  QVector coeffs;  // ambient length n, supported exactly on `circuit`
};

std::vector<CircuitForm> circuit_forms(const QMatrix& a, const Matroid& m);

}  // namespace semispace

#endif
