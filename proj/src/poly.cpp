#include "semispace/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "semispace/errors.hpp"

namespace semispace {

int mono_total_degree(const Exponents& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

Exponents mono_mul(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool mono_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents mono_quotient(const Exponents& b, const Exponents& a) {
  Exponents out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

Exponents mono_lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Poly Poly::constant(int nvars, const BigRational& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::monomial(int nvars, const Exponents& e, const BigRational& c) {
  Poly p(nvars);
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(int nvars, int var) {
  Exponents e(nvars, 0);
  e[var] = 1;
  return monomial(nvars, e);
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && mono_total_degree(terms_.begin()->first) == 0;
}

void Poly::add_term(const Exponents& e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) out.add_term(mono_mul(e1, e2), c1 * c2);
  }
  return out;
}

Poly Poly::scaled(const BigRational& c) const {
  Poly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
  return out;
}

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, mono_total_degree(e));
  return d;
}

BigRational Poly::eval(const QVector& point) const {
  BigRational total = 0;
  for (const auto& [e, c] : terms_) {
    BigRational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

double Poly::eval_double(const std::vector<double>& point) const {
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double t = rat_to_double(c);
    for (std::size_t i = 0; i < e.size(); ++i) t *= std::pow(point[i], e[i]);
    total += t;
  }
  return total;
}

std::string Poly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  auto name = [&](int i) {
    return i < static_cast<int>(var_names.size()) ? var_names[i]
                                                  : "x" + std::to_string(i + 1);
  };
  // Display highest terms first (graded-lex) for readability.
  std::vector<std::pair<Exponents, BigRational>> terms(terms_.begin(), terms_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = mono_total_degree(a.first), db = mono_total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    BigRational coef = c;
    if (first) {
      if (coef < 0) {
        out << "-";
        coef = -coef;
      }
    } else {
      out << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += name(static_cast<int>(i));
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out << rat_to_string(coef);
    } else {
      if (coef != 1) out << rat_to_string(coef) << "*";
      out << vars;
    }
  }
  return out.str();
}

MonomialOrder MonomialOrder::lex(int nvars) {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.nvars_ = nvars;
  return o;
}

MonomialOrder MonomialOrder::grlex(int nvars) {
  MonomialOrder o;
  o.kind_ = Kind::GrLex;
  o.nvars_ = nvars;
  return o;
}

MonomialOrder MonomialOrder::weight_order(QVector w) {
  for (const auto& wi : w) {
    if (wi < 0) throw PreconditionError("weight order requires nonnegative weights");
  }
  MonomialOrder o;
  o.kind_ = Kind::WeightGrLex;
  o.nvars_ = static_cast<int>(w.size());
  o.weight_ = std::move(w);
  return o;
}

MonomialOrder MonomialOrder::elimination(int nvars, int eliminated_prefix) {
  MonomialOrder o;
  o.kind_ = Kind::Elimination;
  o.nvars_ = nvars;
  o.block_ = eliminated_prefix;
  return o;
}

namespace {

int lex_compare(const Exponents& a, const Exponents& b, int from, int to) {
  for (int i = from; i < to; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int grlex_compare(const Exponents& a, const Exponents& b, int from, int to) {
  int da = 0, db = 0;
  for (int i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  return lex_compare(a, b, from, to);
}

}  // namespace

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_compare(a, b, 0, nvars_);
    case Kind::GrLex:
      return grlex_compare(a, b, 0, nvars_);
    case Kind::WeightGrLex: {
      BigRational wa = 0, wb = 0;
      for (int i = 0; i < nvars_; ++i) {
        wa += weight_[i] * a[i];
        wb += weight_[i] * b[i];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return grlex_compare(a, b, 0, nvars_);
    }
    case Kind::Elimination: {
      if (int c = grlex_compare(a, b, 0, block_)) return c;
      return grlex_compare(a, b, block_, nvars_);
    }
  }
  return 0;
}

std::pair<Exponents, BigRational> MonomialOrder::leading_term(const Poly& f) const {
  if (f.is_zero()) throw PreconditionError("leading term of the zero polynomial");
  const auto* best = &*f.terms().begin();
  for (const auto& term : f.terms()) {
    if (less(best->first, term.first)) best = &term;
  }
  return *best;
}

void IdealBasis::add(Poly p) {
  if (!p.is_zero()) gens.push_back(std::move(p));
}

bool IdealBasis::is_unit() const {
  for (const auto& g : gens) {
    if (g.is_constant() && !g.is_zero()) return true;
  }
  return false;
}

BigRational weight_degree(const Poly& f, const QVector& w) {
  for (const auto& wi : w) {
    if (wi < 0) throw PreconditionError("weight degree requires nonnegative weights");
  }
  if (f.is_zero()) return 0;
  bool first = true;
  BigRational best = 0;
  for (const auto& [e, c] : f.terms()) {
    BigRational d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

Poly initial_form(const Poly& f, const QVector& w) {
  if (f.is_zero()) return f;
  const BigRational top = weight_degree(f, w);
  Poly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    BigRational d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
    if (d == top) out.add_term(e, c);
  }
  return out;
}

namespace {

Exponents indicator(int nvars, SmallSet s) {
  Exponents e(nvars, 0);
  for (int i : set_elements(s)) e[i] = 1;
  return e;
}

Poly circuit_polynomial_impl(const CircuitForm& cf, SmallSet i_set, bool minus) {
  const int n = static_cast<int>(cf.coeffs.size());
  const SmallSet ci = cf.circuit & i_set;
  Poly f(n);
  for (int i : set_elements(cf.circuit)) {
    if (set_contains(ci, i)) {
      f.add_term(indicator(n, set_remove(ci, i)), minus ? -cf.coeffs[i] : cf.coeffs[i]);
    } else {
      f.add_term(indicator(n, set_add(ci, i)), cf.coeffs[i]);
    }
  }
  if (minus && (set_size(ci) % 2)) f = -f;
  return f;
}

}  // namespace

Poly circuit_polynomial(const CircuitForm& cf, SmallSet i_set) {
  return circuit_polynomial_impl(cf, i_set, false);
}

Poly circuit_polynomial_minus(const CircuitForm& cf, SmallSet i_set) {
  return circuit_polynomial_impl(cf, i_set, true);
}

Poly homogenize(const Poly& f) {
  const int d = std::max(f.total_degree(), 0);
  Poly out(f.nvars() + 1);
  for (const auto& [e, c] : f.terms()) {
    Exponents h(f.nvars() + 1);
    h[0] = d - mono_total_degree(e);
    std::copy(e.begin(), e.end(), h.begin() + 1);
    out.add_term(h, c);
  }
  return out;
}

Poly substitute_one(const Poly& f, int var) {
  Poly out(f.nvars() - 1);
  for (const auto& [e, c] : f.terms()) {
    Exponents r;
    r.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) != var) r.push_back(e[i]);
    }
    out.add_term(r, c);
  }
  return out;
}

Poly substitute_zero(const Poly& f, int var) {
  Poly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) out.add_term(e, c);
  }
  return out;
}

}  // namespace semispace
