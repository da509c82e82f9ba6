#include "quatinv/base_scalar.hpp"

#include <sstream>

#include "quatinv/errors.hpp"

namespace quatinv {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_class mod(std::to_string(p));
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), mod.get_mpz_t());
  return std::stoull(r.get_str());
}

bool euler_square(std::uint64_t r, std::uint64_t p) {
  if (r == 0) return true;
  return pow_mod(r, (p - 1) / 2, p) == 1;
}

std::uint64_t least_nonresidue(std::uint64_t p) {
  for (std::uint64_t z = 2; z < p; ++z) {
    if (!euler_square(z, p)) return z;
  }
  throw DomainError("no quadratic non-residue modulo " + std::to_string(p));
}

// Tonelli-Shanks; r must be a nonzero square modulo p.
std::uint64_t sqrt_mod(std::uint64_t r, std::uint64_t p) {
  if (p % 4 == 3) return pow_mod(r, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = least_nonresidue(p);
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(r, q, p);
  std::uint64_t x = pow_mod(r, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    x = mul_mod(x, b, p);
  }
  return x;
}

}  // namespace

bool is_probable_prime(std::uint64_t p) {
  mpz_class n(std::to_string(p));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Field Field::prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_probable_prime(p)) {
    throw DomainError("field characteristic must be an odd prime, got " + std::to_string(p));
  }
  if (p >= (std::uint64_t{1} << 62)) {
    throw DomainError("prime field modulus too large: " + std::to_string(p));
  }
  return Field{p};
}

std::string Field::to_string() const {
  return is_rational() ? std::string("q") : "fp:" + std::to_string(p);
}

BaseScalar::BaseScalar(Field field, long value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
  } else {
    r_ = reduce_mod(mpz_class(value), field_.p);
  }
}

BaseScalar::BaseScalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

BaseScalar BaseScalar::from_fraction(Field field, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  BaseScalar out;
  out.field_ = field;
  if (field.is_rational()) {
    out.q_ = mpq_class(num, den);
    out.q_.canonicalize();
    return out;
  }
  std::uint64_t d = reduce_mod(den, field.p);
  if (d == 0) throw DomainError("denominator divisible by the field characteristic");
  out.r_ = mul_mod(reduce_mod(num, field.p), pow_mod(d, field.p - 2, field.p), field.p);
  return out;
}

bool BaseScalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

bool BaseScalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

const mpq_class& BaseScalar::rational() const {
  if (!field_.is_rational()) throw FieldMismatch("rational() on a prime-field scalar");
  return q_;
}

std::uint64_t BaseScalar::residue() const {
  if (field_.is_rational()) throw FieldMismatch("residue() on a rational scalar");
  return r_;
}

void BaseScalar::check_same_field(const BaseScalar& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw FieldMismatch("scalars over " + field_.to_string() + " and " + rhs.field_.to_string());
  }
}

BaseScalar BaseScalar::operator-() const {
  BaseScalar out = *this;
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = field_.p - r_;
  }
  return out;
}

BaseScalar& BaseScalar::operator+=(const BaseScalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + rhs.r_) % field_.p);
  }
  return *this;
}

BaseScalar& BaseScalar::operator-=(const BaseScalar& rhs) { return *this += -rhs; }

BaseScalar& BaseScalar::operator*=(const BaseScalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    r_ = mul_mod(r_, rhs.r_, field_.p);
  }
  return *this;
}

BaseScalar BaseScalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  BaseScalar out = *this;
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
    out.q_.canonicalize();
  } else {
    out.r_ = pow_mod(r_, field_.p - 2, field_.p);
  }
  return out;
}

BaseScalar& BaseScalar::operator/=(const BaseScalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool BaseScalar::operator==(const BaseScalar& rhs) const {
  if (!(field_ == rhs.field_)) return false;
  return field_.is_rational() ? q_ == rhs.q_ : r_ == rhs.r_;
}

std::string BaseScalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

Factorization factor_bounded(const mpz_class& n, std::uint64_t bound) {
  if (n == 0) throw DomainError("factorization of zero");
  Factorization out;
  out.sign = sgn(n) < 0 ? -1 : 1;
  mpz_class m = abs(n);
  auto divide_out = [&](const mpz_class& d) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      m /= d;
      ++e;
    }
    if (e > 0) out.primes.emplace_back(d, e);
  };
  divide_out(2);
  for (std::uint64_t d = 3; d <= bound; d += 2) {
    mpz_class dd(static_cast<unsigned long>(d));
    if (dd * dd > m) break;
    divide_out(dd);
  }
  if (m == 1) return out;
  mpz_class b(static_cast<unsigned long>(bound));
  mpz_class b2 = b * b;
  if (m < b2 || mpz_probab_prime_p(m.get_mpz_t(), 40) == 2) {
    out.primes.emplace_back(m, 1);
    return out;
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class r = sqrt(m);
    if (r < b2 || mpz_probab_prime_p(r.get_mpz_t(), 40) == 2) {
      out.primes.emplace_back(r, 2);
      return out;
    }
  }
  throw FactorizationLimit("cofactor " + m.get_str() + " exceeds the trial-division bound " +
                           std::to_string(bound));
}

mpz_class squarefree_part(const mpz_class& n, std::uint64_t bound) {
  Factorization f = factor_bounded(n, bound);
  mpz_class out = f.sign;
  for (const auto& [prime, e] : f.primes) {
    if (e % 2 == 1) out *= prime;
  }
  return out;
}

bool is_square(const BaseScalar& x) {
  if (x.field().is_rational()) {
    const mpq_class& q = x.rational();
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
  }
  return euler_square(x.residue(), x.field().p);
}

std::optional<BaseScalar> sqrt_exact(const BaseScalar& x) {
  if (!is_square(x)) return std::nullopt;
  if (x.field().is_rational()) {
    const mpq_class& q = x.rational();
    mpz_class num = sqrt(mpz_class(q.get_num()));
    mpz_class den = sqrt(mpz_class(q.get_den()));
    return BaseScalar(mpq_class(num, den));
  }
  std::uint64_t r = x.residue();
  if (r == 0) return x;
  return BaseScalar(x.field(), static_cast<long>(sqrt_mod(r, x.field().p)));
}

BaseScalar square_class_representative(const BaseScalar& x, std::uint64_t bound) {
  if (x.is_zero()) throw DomainError("square class of zero");
  if (x.field().is_rational()) {
    const mpq_class& q = x.rational();
    mpz_class product = q.get_num() * q.get_den();
    return BaseScalar(mpq_class(squarefree_part(product, bound)));
  }
  if (euler_square(x.residue(), x.field().p)) return BaseScalar::one(x.field());
  return BaseScalar(x.field(), static_cast<long>(least_nonresidue(x.field().p)));
}

}  // namespace quatinv
