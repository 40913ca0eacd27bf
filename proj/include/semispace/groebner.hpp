#ifndef SEMISPACE_GROEBNER_HPP
#define SEMISPACE_GROEBNER_HPP

#include <vector>

#include "semispace/linalg.hpp"
#include "semispace/poly.hpp"
#include "semispace/sets.hpp"

namespace semispace {

struct DivisionResult {
  std::vector<Poly> quotients;
  Poly remainder;
};

// Multivariate division: f = Σ qᵢgᵢ + r with no term of r divisible by any
// leading term of G. Deterministic given the input order of G.
DivisionResult divide(const Poly& f, const std::vector<Poly>& gens,
                      const MonomialOrder& ord);

Poly normal_form(const Poly& f, const std::vector<Poly>& gens, const MonomialOrder& ord);

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord);

// Desk-scale guard rails; exceeding either aborts with ResourceCutoff.
struct BuchbergerLimits {
  long max_pairs = 100000;
  long max_support = 10000;
};

// Buchberger with the normal pair-selection strategy (smallest lcm degree
// first) and the coprimality criterion.
IdealBasis buchberger(const IdealBasis& basis, const MonomialOrder& ord,
                      const BuchbergerLimits& limits = {});

// Canonical reduced Gröbner basis: monic, self-reduced, sorted by leading term.
IdealBasis reduce_basis(const IdealBasis& gb, const MonomialOrder& ord);

// True when every S-polynomial of `gens` reduces to zero against `gens`
// (i.e. `gens` is already a Gröbner basis for the given order).
bool spair_criterion(const std::vector<Poly>& gens, const MonomialOrder& ord);

enum class InvSign { Plus, Minus };

/**
 * Elimination oracle for the ideal of inv_I(L) (or inv_I⁻(L)): in variables
 * (t_1..t_n, x_1..x_n) take the linear forms of L⊥ in t, the relations
 * x_i t_i ∓ 1 on I and x_j − t_j off I, then eliminate the t-block. Returns
 * the unit ideal when some element of I is a loop of M(L).
 */
IdealBasis inv_ideal_oracle(const QMatrix& a, SmallSet i_set, InvSign sign,
                            const BuchbergerLimits& limits = {});

}  // namespace semispace

#endif
