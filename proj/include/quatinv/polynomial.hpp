#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quatinv/base_scalar.hpp"

namespace quatinv {

// Exponent vector (e_1, ..., e_n) of t_1^{e_1} ... t_n^{e_n}.
using Exponent = std::vector<int>;

// Right-to-left lexicographic comparison: the last coordinate dominates.
// Returns <0, 0, >0.
int compare_right_lex(const Exponent& a, const Exponent& b);

struct RightLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return compare_right_lex(a, b) < 0;
  }
};

struct Term {
  Exponent exponent;
  BaseScalar coefficient;
};

// Sparse polynomial in F[t_1, ..., t_n]. Terms are kept sorted ascending in
// right-lex order with nonzero coefficients, so the term of least
// right-lex exponent (the one that determines the t-adic valuation) is
// terms().front().
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Field field, std::size_t arity) : field_(field), arity_(arity) {}

  static Polynomial constant(Field field, std::size_t arity, const BaseScalar& c);
  static Polynomial monomial(Field field, const Exponent& e, const BaseScalar& c);
  static Polynomial variable(Field field, std::size_t arity, std::size_t index);
  // Terms may arrive unsorted with repeated exponents; they are combined.
  static Polynomial from_terms(Field field, std::size_t arity, std::vector<Term> terms);

  Field field() const { return field_; }
  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& lowest() const { return terms_.front(); }
  const Term& highest() const { return terms_.back(); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const BaseScalar& c) const;
  Polynomial shifted(const Exponent& e) const;  // multiply by t^e (e may be negative if exact)
  bool operator==(const Polynomial& rhs) const;

  int degree_in(std::size_t var) const;
  // Coefficient of t_var^d, as a polynomial with exponent[var] = 0.
  Polynomial coefficient_in(std::size_t var, int d) const;
  // Componentwise minimum of exponents over all terms.
  Exponent min_exponent() const;
  Polynomial embedded(std::size_t arity) const;  // pad with zero exponents

 private:
  void check_compatible(const Polynomial& rhs) const;

  Field field_;
  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

// Monic gcd (coefficient of the lowest term is 1). gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// a / b where b divides a exactly; throws DomainError otherwise.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

// Polynomial q with q^2 == p, if one exists.
std::optional<Polynomial> sqrt_exact(const Polynomial& p);

}  // namespace quatinv
