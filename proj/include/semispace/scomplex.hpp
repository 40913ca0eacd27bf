#ifndef SEMISPACE_SCOMPLEX_HPP
#define SEMISPACE_SCOMPLEX_HPP

#include <string>
#include <vector>

#include "semispace/matroid.hpp"
#include "semispace/rational.hpp"
#include "semispace/sets.hpp"

namespace semispace {

/**
 * A simplicial complex presented by its facets. Two degenerate cases are
 * distinguished: facets == {} is the void complex (no faces at all), while
 * facets == {∅} is the complex whose only face is the empty set.
 */
struct SimplicialComplex {
  int n_vertices = 0;
  std::vector<std::string> labels;  // display labels, size n_vertices
  std::vector<SmallSet> facets;     // antichain, sorted by (size, mask)

  // Ground set {1, ..., n} with numeric labels.
  static SimplicialComplex on_ground_set(int n);

  bool is_void() const { return facets.empty(); }
  bool is_face(SmallSet s) const;
  // Largest facet size minus one; −1 for {∅}, meaningless for void.
  int dim() const;

  void set_facets(std::vector<SmallSet> f);
};

struct FHVectors {
  // f[i] = f_{i−1} = number of faces of size i, i = 0..d; empty for void.
  std::vector<long long> f;
  // h[0..d] from the standard transformation; empty for void.
  std::vector<long long> h;
};

// Requires distinct coordinates; throws PreconditionError on ties.
void require_distinct(const QVector& w);

// b_I(C): C minus its w-minimum if C ⊆ I, else (C ∩ I) plus the w-maximum of
// C ∖ I. A loop inside I yields the empty set.
SmallSet i_broken_circuit(SmallSet c, SmallSet i_set, const QVector& w);

// Faces are the subsets of [n] containing no I-broken circuit. Void when
// some element of I is a loop.
SimplicialComplex semi_broken_complex(const Matroid& m, SmallSet i_set, const QVector& w);

// Facet count by the loop/coloop/deletion–contraction recursion on the
// w-largest element of I; agrees with |facets(semi_broken_complex)|.
long long facet_count_recursive(const Matroid& m, SmallSet i_set, const QVector& w);

SimplicialComplex cone(const SimplicialComplex& dx, const std::string& new_label);
SimplicialComplex link(const SimplicialComplex& dx, SmallSet sigma);
FHVectors fh_vectors(const SimplicialComplex& dx);

// Inclusion-minimal non-faces (Stanley-Reisner generators). {∅} for void.
std::vector<SmallSet> sr_generators(const SimplicialComplex& dx);

// Complex on {x_1..x_n, y_1..y_n} (x_i ↦ vertex i−1, y_i ↦ vertex n+i−1)
// whose minimal non-faces are x_{min(C)} y_{C∖min(C)}, minima in the u-order.
SimplicialComplex external_activity_complex(const Matroid& m, const QVector& u);

// Checks that Δ_w(M, I) matches the link of x_I y_{[n]∖I} in B_u(M) under
// j ↔ x_j (j ∉ I), i ↔ y_i (i ∈ I), where u = w on I and −w off I.
// Requires strictly positive w and no loop of M inside I.
bool verify_link_isomorphism(const Matroid& m, SmallSet i_set, const QVector& w);

}  // namespace semispace

#endif
