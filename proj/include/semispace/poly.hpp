#ifndef SEMISPACE_POLY_HPP
#define SEMISPACE_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "semispace/matroid.hpp"
#include "semispace/rational.hpp"
#include "semispace/sets.hpp"

namespace semispace {

// Exponent vector of a monomial; length is the ambient variable count.
using Exponents = std::vector<int>;

int mono_total_degree(const Exponents& a);
Exponents mono_mul(const Exponents& a, const Exponents& b);
bool mono_divides(const Exponents& a, const Exponents& b);  // a | b
Exponents mono_quotient(const Exponents& b, const Exponents& a);  // b / a
Exponents mono_lcm(const Exponents& a, const Exponents& b);

/**
 * Sparse polynomial over exact rationals. Terms are kept in a map ordered by
 * exponent vector, so iteration and serialization are deterministic; zero
 * coefficients are never stored.
 */
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const BigRational& c);
  static Poly monomial(int nvars, const Exponents& e, const BigRational& c = 1);
  static Poly variable(int nvars, int var);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Exponents, BigRational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const BigRational& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const BigRational& c) const;
  bool operator==(const Poly& o) const;

  int total_degree() const;  // −1 for the zero polynomial

  BigRational eval(const QVector& point) const;
  double eval_double(const std::vector<double>& point) const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  int nvars_ = 0;
  std::map<Exponents, BigRational> terms_;
};

/**
 * Total monomial order. Weight orders are completed by a graded-lex
 * tie-break; the elimination order compares the leading block graded-lex
 * first, so a Gröbner basis eliminates those variables.
 */
class MonomialOrder {
 public:
  enum class Kind { Lex, GrLex, WeightGrLex, Elimination };

  static MonomialOrder lex(int nvars);
  static MonomialOrder grlex(int nvars);
  static MonomialOrder weight_order(QVector w);  // entries must be ≥ 0
  static MonomialOrder elimination(int nvars, int eliminated_prefix);

  int nvars() const { return nvars_; }
  Kind kind() const { return kind_; }

  // −1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Exponents& a, const Exponents& b) const;
  bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }

  // Leading term of a nonzero polynomial.
  std::pair<Exponents, BigRational> leading_term(const Poly& f) const;

 private:
  Kind kind_ = Kind::GrLex;
  int nvars_ = 0;
  QVector weight_;
  int block_ = 0;
};

struct IdealBasis {
  int nvars = 0;
  std::vector<Poly> gens;  // no zero generators

  void add(Poly p);
  bool is_unit() const;  // contains a nonzero constant
};

// deg_w and In_w for nonnegative rational weights (max convention).
BigRational weight_degree(const Poly& f, const QVector& w);
Poly initial_form(const Poly& f, const QVector& w);

// f_C = x^{C∩I}·ℓ_C(inv_I(x)), cleared of denominators; square-free.
Poly circuit_polynomial(const CircuitForm& cf, SmallSet i_set);

// Variant for inv_I⁻ (x_i ↦ −1/x_i on I), multiplied by (−1)^{|C∩I|}.
Poly circuit_polynomial_minus(const CircuitForm& cf, SmallSet i_set);

// Standard homogenization with a fresh variable inserted at index 0.
Poly homogenize(const Poly& f);

// Substitutes variable `var` := 1 and removes it from the ring.
Poly substitute_one(const Poly& f, int var);

// Substitutes variable `var` := 0 (ambient ring unchanged).
Poly substitute_zero(const Poly& f, int var);

}  // namespace semispace

#endif
