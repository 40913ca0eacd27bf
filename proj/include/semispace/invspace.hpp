#ifndef SEMISPACE_INVSPACE_HPP
#define SEMISPACE_INVSPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semispace/groebner.hpp"
#include "semispace/matroid.hpp"
#include "semispace/scomplex.hpp"

namespace semispace {

/**
 * Degree of the semi-inverted space by every route that applies: facet count
 * of Δ_w(M, I), the loop/coloop/deletion–contraction recursion, and the
 * closed binomial formula when the matroid is uniform. All present entries
 * must agree and the h-vector must sum to the facet count.
 */
struct DegreeReport {
  long long by_facets = 0;
  long long by_recursion = 0;
  std::optional<long long> by_formula;
  std::vector<long long> hilbert_h;

  bool consistent() const;
};

DegreeReport degree(const Matroid& m, SmallSet i_set, const QVector& w);

// Binomial formula for uniform matroids: Σ_{j=k+d−n}^{d} C(k,j) − C(k−1,d),
// with C(a,b) = 0 whenever a < 0 or b < 0.
long long uniform_degree_formula(int d, int n, int k);

// Numerator h_0 + h_1 t + ... + h_d t^d of the affine Hilbert series over
// (1−t)^{d+1}; the zero list for the void complex.
std::vector<BigRational> affine_hilbert_numerator(const Matroid& m, SmallSet i_set,
                                                  const QVector& w);

// Theorem-of-supports criterion: with T = S ∪ ([n]∖I), the support S is
// achievable iff T is a flat of M and T∖S is a flat of M|_T. Requires no
// loop of M inside I.
bool support_achievable(const Matroid& m, SmallSet i_set, SmallSet s);

struct SupportsReport {
  bool loop_in_i = false;
  std::vector<SmallSet> achievable;  // sorted by (size, mask)
};

SupportsReport achievable_supports(const Matroid& m, SmallSet i_set);

/**
 * Cross-check of a single support against the elimination oracle: substitute
 * x_j = 0 off S and inspect Gröbner normal forms of powers of Π_{i∈S} x_i.
 * Conclusive only when the ideal is unit or a power reduces to zero.
 */
enum class OracleSupportResult { Achievable, NotAchievable, Inconclusive };

OracleSupportResult oracle_support_check(const IdealBasis& oracle_ideal, SmallSet s,
                                         int power_cap = 8);

struct UgbTrial {
  std::vector<long> weights;
  bool spair_ok = false;
  bool oracle_generators_reduce = false;  // oracle gens → 0 against {f_C}
  bool circuit_polys_reduce = false;      // f_C → 0 against oracle basis
  bool initial_ideal_matches = false;     // ⟨In_w f_C⟩ = Stanley-Reisner gens
  bool inconclusive = false;
  std::string note;

  bool passed() const {
    return !inconclusive && spair_ok && oracle_generators_reduce &&
           circuit_polys_reduce && initial_ideal_matches;
  }
};

struct UgbReport {
  std::uint64_t seed = 0;
  bool loop_in_i = false;  // vacuous pass: unit ideal on both sides
  std::vector<UgbTrial> trials;

  bool all_passed() const;
  int inconclusive_count() const;
};

/**
 * Runs the universal-Gröbner-basis property for `trials` random distinct
 * positive integer weight vectors (entries in [1, 1000], sampled from the
 * seed). Buchberger cutoffs make a trial inconclusive, never failed.
 */
UgbReport verify_ugb(const QMatrix& a, SmallSet i_set, int trials, std::uint64_t seed);

}  // namespace semispace

#endif
