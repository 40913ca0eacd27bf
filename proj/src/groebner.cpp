#include "semispace/groebner.hpp"

#include <algorithm>

#include "semispace/errors.hpp"

namespace semispace {

namespace {

void check_support(const Poly& f, const BuchbergerLimits& limits) {
  if (static_cast<long>(f.terms().size()) > limits.max_support) {
    throw ResourceCutoff(ResourceCutoff::Kind::SupportLimit,
                         "polynomial support exceeded desk-scale limit");
  }
}

}  // namespace

DivisionResult divide(const Poly& f, const std::vector<Poly>& gens,
                      const MonomialOrder& ord) {
  DivisionResult res;
  res.quotients.assign(gens.size(), Poly(f.nvars()));
  res.remainder = Poly(f.nvars());

  std::vector<std::pair<Exponents, BigRational>> leads;
  leads.reserve(gens.size());
  for (const auto& g : gens) leads.push_back(ord.leading_term(g));

  Poly work = f;
  while (!work.is_zero()) {
    auto [le, lc] = ord.leading_term(work);
    bool reduced = false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!mono_divides(leads[k].first, le)) continue;
      const Exponents q = mono_quotient(le, leads[k].first);
      const BigRational coef = lc / leads[k].second;
      res.quotients[k].add_term(q, coef);
      work = work - gens[k] * Poly::monomial(f.nvars(), q, coef);
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.add_term(le, lc);
      Poly lead_poly = Poly::monomial(f.nvars(), le, lc);
      work = work - lead_poly;
    }
  }
  return res;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& gens, const MonomialOrder& ord) {
  if (gens.empty()) return f;
  return divide(f, gens, ord).remainder;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  const auto [ef, cf] = ord.leading_term(f);
  const auto [eg, cg] = ord.leading_term(g);
  const Exponents l = mono_lcm(ef, eg);
  Poly a = Poly::monomial(f.nvars(), mono_quotient(l, ef), 1 / cf);
  Poly b = Poly::monomial(f.nvars(), mono_quotient(l, eg), 1 / cg);
  return f * a - g * b;
}

IdealBasis buchberger(const IdealBasis& basis, const MonomialOrder& ord,
                      const BuchbergerLimits& limits) {
  IdealBasis gb;
  gb.nvars = basis.nvars;
  for (const auto& g : basis.gens) gb.add(g);
  if (gb.gens.empty()) return gb;

  struct Pair {
    int deg;
    Exponents lcm;
    std::size_t i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (int c = ord.compare(a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<std::pair<Exponents, BigRational>> leads;
  for (const auto& g : gb.gens) leads.push_back(ord.leading_term(g));

  std::vector<Pair> queue;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Exponents l = mono_lcm(leads[i].first, leads[j].first);
      queue.push_back(Pair{mono_total_degree(l), std::move(l), i, j});
    }
  };
  for (std::size_t j = 0; j < gb.gens.size(); ++j) push_pairs_for(j);

  long processed = 0;
  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair p = *it;
    queue.erase(it);

    if (++processed > limits.max_pairs) {
      throw ResourceCutoff(ResourceCutoff::Kind::PairLimit,
                           "Buchberger S-pair limit exceeded");
    }

    // Coprime leading monomials: S-polynomial reduces to zero.
    if (p.lcm == mono_mul(leads[p.i].first, leads[p.j].first)) continue;

    Poly s = s_polynomial(gb.gens[p.i], gb.gens[p.j], ord);
    Poly r = normal_form(s, gb.gens, ord);
    if (r.is_zero()) continue;
    check_support(r, limits);

    gb.gens.push_back(std::move(r));
    leads.push_back(ord.leading_term(gb.gens.back()));
    push_pairs_for(gb.gens.size() - 1);
  }
  return gb;
}

IdealBasis reduce_basis(const IdealBasis& gb, const MonomialOrder& ord) {
  // Discard generators whose leading term is divisible by another leading
  // term, then fully inter-reduce and normalize to monic.
  std::vector<Poly> gens = gb.gens;
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto [ei, ci] = ord.leading_term(gens[i]);
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      const auto [ej, cj] = ord.leading_term(gens[j]);
      if (mono_divides(ej, ei) && (ej != ei || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(gens[i]);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Poly r = normal_form(minimal[i], others, ord);
      if (!(r == minimal[i])) {
        changed = true;
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<long>(i));
          break;
        }
        minimal[i] = std::move(r);
      }
    }
  }

  for (auto& g : minimal) {
    const auto [e, c] = ord.leading_term(g);
    g = g.scaled(1 / c);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return ord.less(ord.leading_term(a).first, ord.leading_term(b).first);
  });

  IdealBasis out;
  out.nvars = gb.nvars;
  out.gens = std::move(minimal);
  return out;
}

bool spair_criterion(const std::vector<Poly>& gens, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Poly s = s_polynomial(gens[i], gens[j], ord);
      if (!normal_form(s, gens, ord).is_zero()) return false;
    }
  }
  return true;
}

IdealBasis inv_ideal_oracle(const QMatrix& a, SmallSet i_set, InvSign sign,
                            const BuchbergerLimits& limits) {
  const int n = a.col_count();
  const int nv = 2 * n;  // t-block then x-block

  IdealBasis gens;
  gens.nvars = nv;
  for (const auto& row : kernel_basis(a).rows) {
    Poly lin(nv);
    for (int i = 0; i < n; ++i) {
      if (row[i] == 0) continue;
      Exponents e(nv, 0);
      e[i] = 1;
      lin.add_term(e, row[i]);
    }
    gens.add(std::move(lin));
  }
  for (int i = 0; i < n; ++i) {
    Poly rel(nv);
    Exponents e(nv, 0);
    if (set_contains(i_set, i)) {
      e[i] = 1;
      e[n + i] = 1;
      rel.add_term(e, 1);
      rel.add_term(Exponents(nv, 0), sign == InvSign::Plus ? BigRational(-1) : BigRational(1));
    } else {
      e[n + i] = 1;
      rel.add_term(e, 1);
      Exponents et(nv, 0);
      et[i] = 1;
      rel.add_term(et, -1);
    }
    gens.add(std::move(rel));
  }

  const MonomialOrder elim = MonomialOrder::elimination(nv, n);
  IdealBasis gb = reduce_basis(buchberger(gens, elim, limits), elim);

  IdealBasis out;
  out.nvars = n;
  if (gb.is_unit()) {
    out.add(Poly::constant(n, 1));
    return out;
  }
  for (const auto& g : gb.gens) {
    bool pure_x = true;
    for (const auto& [e, c] : g.terms()) {
      for (int i = 0; i < n && pure_x; ++i) {
        if (e[i] != 0) pure_x = false;
      }
      if (!pure_x) break;
    }
    if (!pure_x) continue;
    Poly proj(n);
    for (const auto& [e, c] : g.terms()) {
      proj.add_term(Exponents(e.begin() + n, e.end()), c);
    }
    out.add(std::move(proj));
  }
  return out;
}

}  // namespace semispace
