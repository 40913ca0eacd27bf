#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "semispace/matroid.hpp"

using namespace semispace;
using fixtures::ex42_matrix;
using fixtures::mat_from_ints;

namespace {

SmallSet S(std::initializer_list<int> elems_1based) {
  SmallSet s = 0;
  for (int e : elems_1based) s = set_add(s, e - 1);
  return s;
}

}  // namespace

TEST_CASE("circuits of the worked 3x5 matrix") {
  Matroid m = matroid_from_matrix(ex42_matrix());
  CHECK(m.n == 5);
  CHECK(m.rank == 3);
  CHECK(m.circuits == std::vector<SmallSet>{S({1, 2, 4}), S({1, 3, 5}), S({2, 3, 4, 5})});
  CHECK(m.loops() == 0);
  CHECK(m.coloops() == 0);
}

TEST_CASE("zero column gives a loop") {
  Matroid m = matroid_from_matrix(mat_from_ints({{1, 0, 2}, {0, 0, 1}}));
  CHECK(m.is_loop(1));
  CHECK(std::find(m.circuits.begin(), m.circuits.end(), S({2})) != m.circuits.end());
}

TEST_CASE("generic matrices give uniform matroids") {
  Matroid m = matroid_from_matrix(fixtures::vandermonde_matrix(3, 5, 42));
  CHECK(m.rank == 3);
  REQUIRE(m.circuits.size() == 5);  // C(5,4)
  for (SmallSet c : m.circuits) CHECK(set_size(c) == 4);
  CHECK(m.coloops() == 0);
}

TEST_CASE("circuit forms of the worked matrix") {
  QMatrix a = ex42_matrix();
  Matroid m = matroid_from_matrix(a);
  auto forms = circuit_forms(a, m);
  REQUIRE(forms.size() == 3);

  CHECK(forms[0].circuit == S({1, 2, 4}));
  CHECK(forms[0].coeffs == qvec_from_ints({1, 1, 0, -1, 0}));

  CHECK(forms[1].circuit == S({1, 3, 5}));
  CHECK(forms[1].coeffs == qvec_from_ints({1, 0, 1, 0, -1}));

  CHECK(forms[2].circuit == S({2, 3, 4, 5}));
  CHECK(forms[2].coeffs == qvec_from_ints({0, 1, -1, -1, 1}));

  // Each form vanishes on the row span: A·coeffs = 0.
  for (const auto& cf : forms) CHECK(qvec_is_zero(mat_vec(a, cf.coeffs)));
}

TEST_CASE("circuit form of a loop is the coordinate vector") {
  QMatrix a = mat_from_ints({{1, 0}, {0, 0}}).transposed();  // column 2 is zero
  Matroid m = matroid_from_matrix(a);
  REQUIRE(m.is_loop(1));
  auto forms = circuit_forms(a, m);
  bool found = false;
  for (const auto& cf : forms) {
    if (cf.circuit == S({2})) {
      found = true;
      CHECK(cf.coeffs == qvec_from_ints({0, 1}));
    }
  }
  CHECK(found);
}

TEST_CASE("rank, flats, loops, coloops") {
  Matroid m = matroid_from_matrix(ex42_matrix());
  CHECK(rank_of(m, S({1, 2, 4})) == 2);
  CHECK(rank_of(m, S({1, 2, 3, 4, 5})) == 3);
  CHECK(rank_of(m, 0) == 0);
  CHECK(is_flat(m, 0));  // loop-free: the empty set is a flat
  CHECK(is_flat(m, S({1, 2, 3, 4, 5})));
  // {1,2} is not a flat: adding 4 keeps rank 2.
  CHECK_FALSE(is_flat(m, S({1, 2})));
  CHECK(rank_of(m, S({1, 2})) == rank_of(m, S({1, 2, 4})));

  Matroid u35 = Matroid::uniform(3, 5);
  CHECK(u35.coloops() == 0);
  CHECK(Matroid::uniform(5, 5).coloops() == full_set(5));
}

TEST_CASE("deletion and contraction on uniform matroids") {
  Matroid u35 = Matroid::uniform(3, 5);
  Minor del = delete_element(u35, 4);
  CHECK(del.matroid.n == 4);
  CHECK(del.matroid.rank == 3);
  CHECK(del.matroid.circuits == Matroid::uniform(3, 4).circuits);
  CHECK(del.old_of_new == std::vector<int>{0, 1, 2, 3});

  Minor con = contract_element(u35, 4);
  CHECK(con.matroid.circuits == Matroid::uniform(2, 4).circuits);
}

TEST_CASE("contraction of the worked matroid by element 3") {
  Matroid m = matroid_from_matrix(ex42_matrix());
  Minor con = contract_element(m, 2);  // element 3, 0-based index 2
  // New labels: old 1,2,4,5 become 1,2,3,4.
  CHECK(con.old_of_new == std::vector<int>{0, 1, 3, 4});
  // {C∖3} = {124, 15, 245}; all three are inclusion-minimal, and the matrix
  // route below confirms them.
  CHECK(con.matroid.circuits == std::vector<SmallSet>{S({1, 4}), S({1, 2, 3}), S({2, 3, 4})});

  // Independent oracle: M(L ∩ {x3 = 0}) re-embedded on columns {1,2,4,5}.
  // L ∩ {x3=0} = {(r1, r2, 0, r1+r2, r1)}.
  QMatrix slice = fixtures::mat_from_ints({{1, 0, 1, 1}, {0, 1, 1, 0}});
  CHECK(matroid_from_matrix(slice).circuits == con.matroid.circuits);
}

TEST_CASE("contraction of a loop is deletion") {
  Matroid m = matroid_from_matrix(mat_from_ints({{1, 0, 2}, {0, 0, 1}}));
  REQUIRE(m.is_loop(1));
  CHECK(contract_element(m, 1).matroid.circuits == delete_element(m, 1).matroid.circuits);
}

TEST_CASE("restriction composes deletions") {
  Matroid m = matroid_from_matrix(ex42_matrix());
  Minor rest = restrict_to(m, S({1, 2, 4}));
  CHECK(rest.matroid.n == 3);
  CHECK(rest.old_of_new == std::vector<int>{0, 1, 3});
  CHECK(rest.matroid.circuits == std::vector<SmallSet>{S({1, 2, 3})});
  CHECK(rest.matroid.rank == 2);
}

TEST_CASE("matroid axioms hold for random matrices") {
  for (std::uint64_t seed = 20; seed < 60; ++seed) {
    QMatrix a = fixtures::random_matrix(2 + seed % 2, 4 + seed % 3, seed);
    Matroid m = matroid_from_matrix(a);
    // Antichain.
    for (std::size_t i = 0; i < m.circuits.size(); ++i) {
      for (std::size_t j = 0; j < m.circuits.size(); ++j) {
        if (i != j) CHECK_FALSE(set_subset(m.circuits[i], m.circuits[j]));
      }
    }
    // Every circuit is minimally dependent.
    for (SmallSet c : m.circuits) {
      CHECK(rank(a.select_columns(set_elements(c))) == set_size(c) - 1);
      for (int e : set_elements(c)) {
        SmallSet sub = set_remove(c, e);
        CHECK(m.is_independent(sub));
        CHECK(rank(a.select_columns(set_elements(sub))) == set_size(sub));
      }
    }
    // rank_of agrees with exact column rank on a few subsets.
    std::mt19937_64 rng(seed);
    for (int probe = 0; probe < 5; ++probe) {
      SmallSet s = static_cast<SmallSet>(rng()) & full_set(m.n);
      CHECK(rank_of(m, s) == rank(a.select_columns(set_elements(s))));
    }
  }
}

TEST_CASE("minors match projection and intersection of the linear space") {
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    QMatrix a = fixtures::random_matrix(3, 5, seed);
    Matroid m = matroid_from_matrix(a);
    const int i = static_cast<int>(seed % 5);

    // Deletion ↔ dropping the column (projection away from coordinate i).
    std::vector<int> kept;
    for (int j = 0; j < 5; ++j) {
      if (j != i) kept.push_back(j);
    }
    CHECK(delete_element(m, i).matroid.circuits ==
          matroid_from_matrix(a.select_columns(kept)).circuits);

    // Contraction ↔ intersecting with {x_i = 0} and re-embedding. A row
    // combination c·A has i-th coordinate c·(column i), so the intersection
    // is spanned by {c·A : c ∈ ker(column i as a 1×d matrix)}.
    if (m.is_loop(i)) continue;
    QMatrix col_i(std::vector<QVector>{a.column(i)});
    QMatrix combos = kernel_basis(col_i);
    std::vector<QVector> slice_rows;
    for (const auto& c : combos.rows) {
      QVector v = vec_mat(c, a);
      QVector dropped;
      for (int j = 0; j < 5; ++j) {
        if (j != i) dropped.push_back(v[j]);
      }
      slice_rows.push_back(std::move(dropped));
    }
    if (slice_rows.empty()) slice_rows.emplace_back(4, BigRational(0));
    CHECK(contract_element(m, i).matroid.circuits ==
          matroid_from_matrix(QMatrix(slice_rows)).circuits);
  }
}
