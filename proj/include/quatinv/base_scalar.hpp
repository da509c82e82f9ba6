#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace quatinv {

inline constexpr std::uint64_t kDefaultTrialBound = 1000000;

// The base field F: either the rationals (p == 0) or F_p for an odd prime p.
struct Field {
  std::uint64_t p = 0;

  static Field rational() { return Field{0}; }
  // Throws DomainError unless p is an odd prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string to_string() const;
};

// Element of F. Rationals are kept reduced by GMP (gcd 1, positive
// denominator); prime-field elements are representatives in [0, p).
class BaseScalar {
 public:
  BaseScalar() = default;  // rational zero
  BaseScalar(Field field, long value);
  explicit BaseScalar(mpq_class value);

  static BaseScalar zero(Field field) { return BaseScalar(field, 0); }
  static BaseScalar one(Field field) { return BaseScalar(field, 1); }
  // Over F_p the fraction num/den is reduced modulo p (den must be a unit).
  static BaseScalar from_fraction(Field field, const mpz_class& num, const mpz_class& den);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;  // rational fields only
  std::uint64_t residue() const;      // prime fields only

  BaseScalar operator-() const;
  BaseScalar& operator+=(const BaseScalar& rhs);
  BaseScalar& operator-=(const BaseScalar& rhs);
  BaseScalar& operator*=(const BaseScalar& rhs);
  BaseScalar& operator/=(const BaseScalar& rhs);
  BaseScalar inverse() const;

  friend BaseScalar operator+(BaseScalar lhs, const BaseScalar& rhs) { return lhs += rhs; }
  friend BaseScalar operator-(BaseScalar lhs, const BaseScalar& rhs) { return lhs -= rhs; }
  friend BaseScalar operator*(BaseScalar lhs, const BaseScalar& rhs) { return lhs *= rhs; }
  friend BaseScalar operator/(BaseScalar lhs, const BaseScalar& rhs) { return lhs /= rhs; }
  bool operator==(const BaseScalar& rhs) const;

  std::string to_string() const;

 private:
  void check_same_field(const BaseScalar& rhs) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

// Prime factorization of |n| with sign, found by trial division.
struct Factorization {
  int sign = 1;
  std::vector<std::pair<mpz_class, unsigned>> primes;
};

// Trial division up to `bound`; a leftover cofactor c is accepted as prime
// when c < bound^2, or as a prime square when c = r^2 with r < bound^2.
// Anything else raises FactorizationLimit.
Factorization factor_bounded(const mpz_class& n, std::uint64_t bound = kDefaultTrialBound);

// Squarefree part of a nonzero integer, sign preserved: 12 -> 3, -50 -> -2.
mpz_class squarefree_part(const mpz_class& n, std::uint64_t bound = kDefaultTrialBound);

// Square test inside F (exact perfect-square test over Q, Euler's criterion
// over F_p). Zero counts as a square.
bool is_square(const BaseScalar& x);

// y with y^2 == x, if one exists in F.
std::optional<BaseScalar> sqrt_exact(const BaseScalar& x);

// Canonical representative of x F^{x2}: the squarefree integer over Q, and
// over F_p either 1 or the least quadratic non-residue. x must be nonzero.
BaseScalar square_class_representative(const BaseScalar& x,
                                       std::uint64_t bound = kDefaultTrialBound);

bool is_probable_prime(std::uint64_t p);

}  // namespace quatinv
