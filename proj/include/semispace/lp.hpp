#ifndef SEMISPACE_LP_HPP
#define SEMISPACE_LP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "semispace/linalg.hpp"
#include "semispace/rational.hpp"

namespace semispace {

/**
 * A system of exact linear constraints over Q^n with free variables:
 * a·x = b, a·x ≥ b and a·x > b. Dimension is taken from the constraint
 * vectors; zero-dimensional systems are legal.
 */
struct LinearSystem {
  using Constraint = std::pair<QVector, BigRational>;

  std::vector<Constraint> equalities;
  std::vector<Constraint> weak;    // a·x ≥ b
  std::vector<Constraint> strict;  // a·x > b

  int dimension() const;

  LinearSystem& add_eq(QVector a, BigRational b);
  LinearSystem& add_ge(QVector a, BigRational b);
  LinearSystem& add_gt(QVector a, BigRational b);

  // Exact substitution check of a candidate point.
  bool satisfied_by(const QVector& x) const;
};

/**
 * Decides feasibility exactly and returns a rational witness when the system
 * has a solution. Strict inequalities are handled by maximizing a bounded
 * slack with a two-phase rational simplex (Bland's rule); the decision is
 * never approximate.
 */
std::optional<QVector> lp_feasible(const LinearSystem& sys);

}  // namespace semispace

#endif
