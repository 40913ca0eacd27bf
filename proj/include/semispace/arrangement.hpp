#ifndef SEMISPACE_ARRANGEMENT_HPP
#define SEMISPACE_ARRANGEMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semispace/invspace.hpp"
#include "semispace/linalg.hpp"
#include "semispace/lp.hpp"
#include "semispace/matroid.hpp"
#include "semispace/sets.hpp"

namespace semispace {

/**
 * The affine space L⊥ + u, parametrized as x(λ) = u + λᵀ·basis. Everything
 * combinatorial about it (region feasibility, recession cones) is decided
 * with exact rational LPs; only the final point recovery is numeric.
 */
struct AffineSlice {
  QMatrix basis;   // rows form a basis of L⊥
  QVector offset;  // u

  int ambient() const { return static_cast<int>(offset.size()); }
  int dim() const { return basis.row_count(); }

  static AffineSlice orthogonal_complement(const QMatrix& a, QVector u);

  QVector point(const QVector& lambda) const;

  // Exact λ-coordinates of a point on the slice (Gram solve).
  QVector coordinates(const QVector& x) const;
};

// ±1 assignment on I; elements of I not in `positives` carry −1.
struct SignPattern {
  SmallSet i_set = 0;
  SmallSet positives = 0;

  int sign(int i) const { return set_contains(positives, i) ? 1 : -1; }
  std::string to_string() const;  // e.g. "++-" over the sorted elements of I
};

struct RegionReport {
  SignPattern pattern;
  QVector witness;         // exact interior point of P_σ (ambient coordinates)
  QVector witness_lambda;  // the same point in slice coordinates
  bool recession_trivial = false;
  std::optional<std::vector<double>> real_point;   // ambient, Newton-recovered
  std::optional<std::vector<double>> real_lambda;  // slice coordinates
  std::optional<double> residual;  // max |f_C⁻| at real_point
};

// One report per sign pattern σ with P_σ ≠ ∅ (exact decision), in pattern
// order; recession flags and real points are left unset.
std::vector<RegionReport> enumerate_regions(const AffineSlice& slice, SmallSet i_set);

// rec(P_σ) ∩ R^I = {0}, decided exactly by LP.
bool recession_trivial(const AffineSlice& slice, SmallSet i_set, const SignPattern& sigma);

struct NewtonOptions {
  double tol = 1e-10;  // on the gradient norm in slice coordinates
  int max_iterations = 200;
};

// Damped Newton minimization of ½Σ_{j∉I}x_j² − Σ_{i∈I}log|x_i| over P_σ,
// starting from an interior witness. Step halving keeps all σ_i x_i > 0.
std::vector<double> minimize_region(const AffineSlice& slice, SmallSet i_set,
                                    const SignPattern& sigma, const QVector& witness,
                                    const NewtonOptions& opts = {});

struct CensusReport {
  SmallSet i_set = 0;
  QVector u;
  DegreeReport degree;
  std::vector<RegionReport> regions;  // feasible patterns, sorted
  long long qualifying = 0;
  int points_recovered = 0;  // residual below tol
  double residual_tol = 1e-8;
  double min_separation = 0;  // smallest pairwise distance of recovered points
  bool generic_ok = true;
  std::vector<std::string> genericity_notes;

  bool theorem_counts_equal() const {
    return degree.by_facets == qualifying &&
           static_cast<long long>(points_recovered) == qualifying;
  }
};

/**
 * Full region census: enumerates the regions of (L⊥+u)∖{x_i=0}_{i∈I},
 * classifies recession cones, recovers the real point on each qualifying
 * region, and compares against the degree of inv_I(L). The genericity of u
 * is probed by a seeded perturbation re-run (a heuristic surrogate; the
 * instability, if any, is reported and never silently accepted).
 */
CensusReport real_point_census(const QMatrix& a, SmallSet i_set, const QVector& u,
                               const QVector& w, double residual_tol = 1e-8,
                               std::uint64_t seed = 1,
                               const NewtonOptions& newton = {});

// 2-D sections only: the lines x_i = 0 in slice coordinates with the
// recovered points marked.
std::string census_svg(const AffineSlice& slice, SmallSet i_set,
                       const CensusReport& census);

}  // namespace semispace

#endif
