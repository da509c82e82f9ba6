#include "quatinv/laurent_scalar.hpp"

#include <sstream>

#include "quatinv/errors.hpp"

namespace quatinv {

TowerNames default_tower_names(std::size_t arity) {
  if (arity == 1) return {"t"};
  TowerNames names;
  for (std::size_t k = 0; k < arity; ++k) names.push_back("t" + std::to_string(k + 1));
  return names;
}

LaurentScalar::LaurentScalar(Field field, std::size_t arity)
    : num_(field, arity), den_(Polynomial::constant(field, arity, BaseScalar::one(field))) {}

LaurentScalar::LaurentScalar(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (!(num_.field() == den_.field()) || num_.arity() != den_.arity()) {
    throw FieldMismatch("numerator and denominator disagree on field or arity");
  }
  normalize();
}

LaurentScalar LaurentScalar::from_base(const BaseScalar& c, std::size_t arity) {
  return LaurentScalar(Polynomial::constant(c.field(), arity, c),
                       Polynomial::constant(c.field(), arity, BaseScalar::one(c.field())));
}

LaurentScalar LaurentScalar::from_int(Field field, std::size_t arity, long value) {
  return from_base(BaseScalar(field, value), arity);
}

LaurentScalar LaurentScalar::variable(Field field, std::size_t arity, std::size_t index) {
  return LaurentScalar(Polynomial::variable(field, arity, index),
                       Polynomial::constant(field, arity, BaseScalar::one(field)));
}

LaurentScalar LaurentScalar::monomial(const BaseScalar& c, const Exponent& e) {
  Exponent pos(e.size(), 0);
  Exponent neg(e.size(), 0);
  for (std::size_t k = 0; k < e.size(); ++k) (e[k] >= 0 ? pos[k] : neg[k]) = e[k] >= 0 ? e[k] : -e[k];
  return LaurentScalar(Polynomial::monomial(c.field(), pos, c),
                       Polynomial::monomial(c.field(), neg, BaseScalar::one(c.field())));
}

void LaurentScalar::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.field(), num_.arity(), BaseScalar::one(num_.field()));
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const BaseScalar& lc = den_.lowest().coefficient;
  if (!lc.is_one()) {
    BaseScalar inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool LaurentScalar::is_one() const { return num_.is_constant() && den_.is_constant() && !num_.is_zero() && num_.lowest().coefficient.is_one(); }

BaseScalar LaurentScalar::constant_value() const {
  if (!is_constant()) throw DomainError("scalar is not a base-field constant");
  if (num_.is_zero()) return BaseScalar::zero(field());
  return num_.lowest().coefficient;  // denominator is the constant 1
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar out = *this;
  out.num_ = -num_;
  return out;
}

LaurentScalar LaurentScalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return LaurentScalar(den_, num_);
}

LaurentScalar LaurentScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentScalar result = from_int(field(), arity(), 1);
  LaurentScalar base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return LaurentScalar(a.num_ + b.num_, a.den_);
  return LaurentScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) { return a + (-b); }

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero() || b.is_zero()) {
    if (!(a.field() == b.field()) || a.arity() != b.arity()) {
      throw FieldMismatch("scalars over different towers");
    }
    return LaurentScalar(a.field(), a.arity());
  }
  // cross-cancel first to keep the gcd inputs small
  Polynomial g1 = a.den_.is_constant() || b.num_.is_constant() ? Polynomial() : gcd(b.num_, a.den_);
  Polynomial g2 = b.den_.is_constant() || a.num_.is_constant() ? Polynomial() : gcd(a.num_, b.den_);
  Polynomial an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!g1.is_zero() && !g1.is_constant()) {
    bn = divide_exact(bn, g1);
    ad = divide_exact(ad, g1);
  }
  if (!g2.is_zero() && !g2.is_constant()) {
    an = divide_exact(an, g2);
    bd = divide_exact(bd, g2);
  }
  return LaurentScalar(an * bn, ad * bd);
}

LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b) { return a * b.inverse(); }

LaurentScalar LaurentScalar::embedded(std::size_t arity) const {
  LaurentScalar out = *this;
  out.num_ = num_.embedded(arity);
  out.den_ = den_.embedded(arity);
  return out;
}

namespace {

const TowerNames& names_or_default(const TowerNames& names, std::size_t arity, TowerNames& storage) {
  if (names.size() == arity) return names;
  storage = default_tower_names(arity);
  return storage;
}

std::string monomial_text(const Exponent& e, const TowerNames& names, bool compact) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty() && !compact) out += '*';
    out += names[k];
    if (e[k] != 1) out += '^' + std::to_string(e[k]);
  }
  return out;
}

// Sum of terms, highest first; `compact` drops the '*' between coefficient
// and monomial.
std::string polynomial_text(const Polynomial& p, const TowerNames& names, bool compact) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (std::size_t idx = terms.size(); idx-- > 0;) {
    const Term& t = terms[idx];
    std::string c = t.coefficient.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    std::string mono = monomial_text(t.exponent, names, compact);
    if (idx + 1 == terms.size()) {
      if (negative) out += '-';
    } else {
      out += negative ? "-" : "+";
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      bool fraction = c.find('/') != std::string::npos;
      if (fraction && compact) c = "(" + c + ")";
      out += c + (compact ? "" : "*") + mono;
    }
  }
  return out;
}

std::string render(const LaurentScalar& x, const TowerNames& given, bool compact) {
  TowerNames storage;
  const TowerNames& names = names_or_default(given, x.arity(), storage);
  std::string num = polynomial_text(x.numerator(), names, compact);
  if (x.denominator().is_constant()) return num;
  std::string den = polynomial_text(x.denominator(), names, compact);
  if (x.numerator().terms().size() > 1) num = "(" + num + ")";
  const Polynomial& d = x.denominator();
  int factors = 0;
  for (int e : d.lowest().exponent) factors += e != 0 ? 1 : 0;
  if (d.terms().size() > 1 || factors > 1 || !d.lowest().coefficient.is_one()) {
    den = "(" + den + ")";
  }
  return num + "/" + den;
}

}  // namespace

std::string LaurentScalar::to_string(const TowerNames& names) const { return render(*this, names, false); }

std::string LaurentScalar::to_compact_string(const TowerNames& names) const {
  return render(*this, names, true);
}

Exponent valuation_exponent(const LaurentScalar& x) {
  if (x.is_zero()) throw DomainError("valuation of zero is infinite");
  const Exponent& a = x.numerator().lowest().exponent;
  const Exponent& b = x.denominator().lowest().exponent;
  Exponent e(a.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = a[k] - b[k];
  return e;
}

GammaValue valuation(const LaurentScalar& x) {
  if (x.is_zero()) return GammaValue::infinity(x.arity());
  return GammaValue::from_exponent(valuation_exponent(x));
}

BaseScalar leading_coefficient(const LaurentScalar& x) {
  if (x.is_zero()) throw DomainError("leading coefficient of zero");
  return x.numerator().lowest().coefficient / x.denominator().lowest().coefficient;
}

BaseScalar residue(const LaurentScalar& x) {
  if (x.is_zero()) throw DomainError("residue of zero: valuation is infinite, not 0");
  Exponent v = valuation_exponent(x);
  for (int e : v) {
    if (e != 0) {
      throw DomainError("residue requires valuation 0, got " + GammaValue::from_exponent(v).to_string());
    }
  }
  return leading_coefficient(x);
}

LaurentScalar scale_monomial(const LaurentScalar& x, const BaseScalar& c, const Exponent& e) {
  return x * LaurentScalar::monomial(c, e);
}

LaurentScalar unit_part(const LaurentScalar& x) {
  Exponent v = valuation_exponent(x);
  for (int& e : v) e = -e;
  return scale_monomial(x, BaseScalar::one(x.field()), v);
}

bool SquareClass::is_trivial() const {
  if (!unit.is_one()) return false;
  for (int p : parity) {
    if (p != 0) return false;
  }
  return true;
}

unsigned SquareClass::parity_bits() const {
  unsigned bits = 0;
  for (std::size_t k = 0; k < parity.size(); ++k) {
    if (parity[k]) bits |= 1u << k;
  }
  return bits;
}

std::string SquareClass::to_string(const TowerNames& names) const {
  return representative(*this, unit.field()).to_compact_string(names);
}

bool is_square(const LaurentScalar& x) {
  if (x.is_zero()) throw DomainError("is_square of zero");
  for (int e : valuation_exponent(x)) {
    if (e % 2 != 0) return false;
  }
  return is_square(leading_coefficient(x));
}

SquareClass square_class(const LaurentScalar& x, std::uint64_t bound) {
  if (x.is_zero()) throw DomainError("square class of zero");
  SquareClass sc;
  sc.unit = square_class_representative(leading_coefficient(x), bound);
  for (int e : valuation_exponent(x)) sc.parity.push_back(((e % 2) + 2) % 2);
  return sc;
}

LaurentScalar representative(const SquareClass& sc, Field field) {
  Exponent e(sc.parity.begin(), sc.parity.end());
  BaseScalar c = sc.unit;
  if (!(c.field() == field)) throw FieldMismatch("square class over another field");
  return LaurentScalar::monomial(c, e);
}

SquareClass multiply_classes(const SquareClass& a, const SquareClass& b, std::uint64_t bound) {
  return square_class(representative(a, a.unit.field()) * representative(b, b.unit.field()), bound);
}

std::optional<LaurentScalar> sqrt_exact(const LaurentScalar& x) {
  if (x.is_zero()) return x;
  // reduced num/den with monic denominator: x is a square iff num and den are
  auto den = sqrt_exact(x.denominator());
  if (!den) return std::nullopt;
  auto num = sqrt_exact(x.numerator());
  if (!num) return std::nullopt;
  return LaurentScalar(*num, *den);
}

}  // namespace quatinv
