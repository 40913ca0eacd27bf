#include "semispace/invspace.hpp"

#include <algorithm>
#include <random>

#include "semispace/errors.hpp"

namespace semispace {

namespace {

long long binom(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

bool is_uniform(const Matroid& m) {
  if (m.rank == m.n) return m.circuits.empty();
  if (static_cast<long long>(m.circuits.size()) != binom(m.n, m.rank + 1)) return false;
  for (SmallSet c : m.circuits) {
    if (set_size(c) != m.rank + 1) return false;
  }
  return true;
}

}  // namespace

bool DegreeReport::consistent() const {
  if (by_facets != by_recursion) return false;
  if (by_formula && *by_formula != by_facets) return false;
  long long h_sum = 0;
  for (long long h : hilbert_h) h_sum += h;
  return h_sum == by_facets;
}

long long uniform_degree_formula(int d, int n, int k) {
  long long total = 0;
  for (int j = k + d - n; j <= d; ++j) total += binom(k, j);
  return total - binom(k - 1, d);
}

DegreeReport degree(const Matroid& m, SmallSet i_set, const QVector& w) {
  require_distinct(w);
  DegreeReport report;

  SimplicialComplex dx = semi_broken_complex(m, i_set, w);
  report.by_facets = dx.is_void() ? 0 : static_cast<long long>(dx.facets.size());
  report.by_recursion = facet_count_recursive(m, i_set, w);
  if (is_uniform(m)) {
    report.by_formula = uniform_degree_formula(m.rank, m.n, set_size(i_set));
  }
  report.hilbert_h = fh_vectors(dx).h;

  if (!report.consistent()) {
    throw ConsistencyError("degree routes disagree (facets " +
                           std::to_string(report.by_facets) + ", recursion " +
                           std::to_string(report.by_recursion) + ")");
  }
  return report;
}

std::vector<BigRational> affine_hilbert_numerator(const Matroid& m, SmallSet i_set,
                                                  const QVector& w) {
  SimplicialComplex dx = semi_broken_complex(m, i_set, w);
  if (dx.is_void()) return {BigRational(0)};
  std::vector<BigRational> out;
  for (long long h : fh_vectors(dx).h) out.emplace_back(static_cast<long>(h));
  return out;
}

bool support_achievable(const Matroid& m, SmallSet i_set, SmallSet s) {
  for (int i : set_elements(i_set)) {
    if (m.is_loop(i)) {
      throw PreconditionError("support criterion requires no loop of M inside I");
    }
  }
  const SmallSet t = s | (full_set(m.n) & ~i_set);
  if (!is_flat(m, t)) return false;
  Minor rest = restrict_to(m, t);
  SmallSet t_minus_s = 0;
  for (int k = 0; k < rest.matroid.n; ++k) {
    if (!set_contains(s, rest.old_of_new[k])) t_minus_s = set_add(t_minus_s, k);
  }
  return is_flat(rest.matroid, t_minus_s);
}

SupportsReport achievable_supports(const Matroid& m, SmallSet i_set) {
  SupportsReport report;
  for (int i : set_elements(i_set)) {
    if (m.is_loop(i)) {
      report.loop_in_i = true;
      return report;
    }
  }
  const SmallSet all = full_set(m.n);
  for (SmallSet s = 0; s <= all; ++s) {
    if (support_achievable(m, i_set, s)) report.achievable.push_back(s);
    if (s == all) break;
  }
  std::sort(report.achievable.begin(), report.achievable.end(),
            [](SmallSet a, SmallSet b) {
              int sa = set_size(a), sb = set_size(b);
              return sa != sb ? sa < sb : a < b;
            });
  return report;
}

OracleSupportResult oracle_support_check(const IdealBasis& oracle_ideal, SmallSet s,
                                         int power_cap) {
  const int n = oracle_ideal.nvars;
  IdealBasis restricted;
  restricted.nvars = n;
  for (const auto& g : oracle_ideal.gens) {
    Poly sub = g;
    for (int j = 0; j < n; ++j) {
      if (!set_contains(s, j)) sub = substitute_zero(sub, j);
    }
    restricted.add(std::move(sub));
  }
  if (restricted.is_unit()) return OracleSupportResult::NotAchievable;

  const MonomialOrder ord = MonomialOrder::grlex(n);
  IdealBasis gb;
  try {
    gb = reduce_basis(buchberger(restricted, ord), ord);
  } catch (const ResourceCutoff&) {
    return OracleSupportResult::Inconclusive;
  }
  if (gb.is_unit()) return OracleSupportResult::NotAchievable;

  Exponents prod(n, 0);
  for (int i : set_elements(s)) prod[i] = 1;
  Poly power = Poly::constant(n, 1);
  const Poly step = Poly::monomial(n, prod, 1);
  for (int k = 1; k <= power_cap; ++k) {
    power = power * step;
    if (normal_form(power, gb.gens, ord).is_zero()) {
      return OracleSupportResult::NotAchievable;
    }
  }
  return OracleSupportResult::Achievable;
}

bool UgbReport::all_passed() const {
  if (loop_in_i) return true;
  for (const auto& t : trials) {
    if (!t.inconclusive && !t.passed()) return false;
  }
  return true;
}

int UgbReport::inconclusive_count() const {
  int c = 0;
  for (const auto& t : trials) c += t.inconclusive ? 1 : 0;
  return c;
}

UgbReport verify_ugb(const QMatrix& a, SmallSet i_set, int trials, std::uint64_t seed) {
  UgbReport report;
  report.seed = seed;

  const Matroid m = matroid_from_matrix(a);
  const int n = m.n;
  for (int i : set_elements(i_set)) {
    if (m.is_loop(i)) {
      // Circuit polynomial of the loop is a constant, the oracle returns the
      // unit ideal; the theorem holds vacuously.
      report.loop_in_i = true;
      return report;
    }
  }

  const auto forms = circuit_forms(a, m);
  std::vector<Poly> circuit_polys;
  for (const auto& cf : forms) circuit_polys.push_back(circuit_polynomial(cf, i_set));

  bool circuit_polys_reduce = false;
  bool oracle_ok = true;
  IdealBasis oracle;
  std::string oracle_note;
  try {
    oracle = inv_ideal_oracle(a, i_set, InvSign::Plus);
    const MonomialOrder xord = MonomialOrder::grlex(n);
    circuit_polys_reduce = true;
    for (const auto& f : circuit_polys) {
      if (!normal_form(f, oracle.gens, xord).is_zero()) {
        circuit_polys_reduce = false;
        break;
      }
    }
  } catch (const ResourceCutoff& e) {
    oracle_ok = false;
    oracle_note = e.what();
  }

  std::mt19937_64 rng(seed);
  auto sample_weights = [&]() {
    std::vector<long> w(n);
    for (;;) {
      for (int i = 0; i < n; ++i) w[i] = 1 + static_cast<long>(rng() % 1000);
      std::vector<long> sorted = w;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return w;
    }
  };

  for (int t = 0; t < trials; ++t) {
    UgbTrial trial;
    trial.weights = sample_weights();
    QVector w = qvec_from_ints(trial.weights);
    if (!oracle_ok) {
      trial.inconclusive = true;
      trial.note = oracle_note;
      report.trials.push_back(std::move(trial));
      continue;
    }
    try {
      const MonomialOrder ord = MonomialOrder::weight_order(w);
      trial.spair_ok = spair_criterion(circuit_polys, ord);
      trial.oracle_generators_reduce = true;
      for (const auto& g : oracle.gens) {
        if (!normal_form(g, circuit_polys, ord).is_zero()) {
          trial.oracle_generators_reduce = false;
          break;
        }
      }
      trial.circuit_polys_reduce = circuit_polys_reduce;

      std::vector<SmallSet> initial_supports;
      bool monomial_initials = true;
      for (const auto& f : circuit_polys) {
        Poly in = initial_form(f, w);
        if (in.terms().size() != 1) {
          monomial_initials = false;
          break;
        }
        SmallSet supp = 0;
        const Exponents& e = in.terms().begin()->first;
        for (int i = 0; i < n; ++i) {
          if (e[i] > 0) supp = set_add(supp, i);
        }
        initial_supports.push_back(supp);
      }
      if (monomial_initials) {
        auto mins = inclusion_minimal(std::move(initial_supports));
        auto sr = sr_generators(semi_broken_complex(m, i_set, w));
        std::sort(mins.begin(), mins.end());
        std::sort(sr.begin(), sr.end());
        trial.initial_ideal_matches = (mins == sr);
      }
    } catch (const ResourceCutoff& e) {
      trial.inconclusive = true;
      trial.note = e.what();
    }
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace semispace
