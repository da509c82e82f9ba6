#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatinv/gamma_value.hpp"
#include "quatinv/polynomial.hpp"

namespace quatinv {

// Names of the tower indeterminates, innermost first: F((t1))((t2)) is
// {"t1", "t2"}. Arity 1 defaults to {"t"}.
using TowerNames = std::vector<std::string>;
TowerNames default_tower_names(std::size_t arity);

// Element of F(t_1, ..., t_n), read inside the iterated Laurent field
// F((t_1))...((t_n)). Always stored as a reduced fraction whose denominator
// has lowest-term coefficient 1, so equal values compare equal structurally.
class LaurentScalar {
 public:
  LaurentScalar() = default;  // rational zero of arity 0
  LaurentScalar(Field field, std::size_t arity);
  LaurentScalar(Polynomial num, Polynomial den);

  static LaurentScalar from_base(const BaseScalar& c, std::size_t arity);
  static LaurentScalar from_int(Field field, std::size_t arity, long value);
  static LaurentScalar variable(Field field, std::size_t arity, std::size_t index);
  // c * t^e with e possibly negative.
  static LaurentScalar monomial(const BaseScalar& c, const Exponent& e);

  Field field() const { return num_.field(); }
  std::size_t arity() const { return num_.arity(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  BaseScalar constant_value() const;  // requires is_constant()

  LaurentScalar operator-() const;
  LaurentScalar inverse() const;
  LaurentScalar pow(int e) const;
  friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b);
  LaurentScalar& operator+=(const LaurentScalar& b) { return *this = *this + b; }
  LaurentScalar& operator*=(const LaurentScalar& b) { return *this = *this * b; }
  bool operator==(const LaurentScalar& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }

  LaurentScalar embedded(std::size_t arity) const;

  // Parseable text, e.g. "3*t1^2/t2", "-(1+t)/2".
  std::string to_string(const TowerNames& names = {}) const;
  // Juxtaposed form used in quaternion symbols: "5t", "-t1t2".
  std::string to_compact_string(const TowerNames& names = {}) const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

// Exponent of the lowest monomial of the numerator minus that of the
// denominator; throws on zero.
Exponent valuation_exponent(const LaurentScalar& x);
GammaValue valuation(const LaurentScalar& x);

// Ratio of the lowest-term coefficients: the residue of x / t^{v(x)}.
BaseScalar leading_coefficient(const LaurentScalar& x);

// Residue in F; x must have valuation 0.
BaseScalar residue(const LaurentScalar& x);

// x with the monomial t^{v(x)} divided out (a unit of valuation 0).
LaurentScalar unit_part(const LaurentScalar& x);

// x * c * t^e.
LaurentScalar scale_monomial(const LaurentScalar& x, const BaseScalar& c, const Exponent& e);

// Square class x = c * t^parity * (square): c a base-field representative.
struct SquareClass {
  BaseScalar unit;
  std::vector<int> parity;  // entries in {0, 1}

  bool is_trivial() const;
  bool operator==(const SquareClass& rhs) const = default;
  unsigned parity_bits() const;
  std::string to_string(const TowerNames& names = {}) const;
};

bool is_square(const LaurentScalar& x);
SquareClass square_class(const LaurentScalar& x, std::uint64_t bound = kDefaultTrialBound);
// c * t^parity as a scalar of the given arity.
LaurentScalar representative(const SquareClass& sc, Field field);
SquareClass multiply_classes(const SquareClass& a, const SquareClass& b,
                             std::uint64_t bound = kDefaultTrialBound);

// Square root inside F(t_1, ..., t_n), when it exists there. A square of the
// Laurent tower need not have one (9 + t has none).
std::optional<LaurentScalar> sqrt_exact(const LaurentScalar& x);

}  // namespace quatinv
