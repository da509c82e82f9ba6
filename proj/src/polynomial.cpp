#include "quatinv/polynomial.hpp"

#include <algorithm>

#include "quatinv/errors.hpp"

namespace quatinv {

int compare_right_lex(const Exponent& a, const Exponent& b) {
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

namespace {

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

bool divides_exponent(const Exponent& d, const Exponent& e) {
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] > e[k]) return false;
  }
  return true;
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero() || p.lowest().coefficient.is_one()) return p;
  return p.scaled(p.lowest().coefficient.inverse());
}

// Constant multiple with coprime integer coefficients over Q; monic over F_p.
// Keeps remainder sequences from growing their coefficients.
Polynomial numeric_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  if (!p.field().is_rational()) return monic(p);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Term& t : p.terms()) {
    const mpq_class& c = t.coefficient.rational();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale == 1) return p;
  return p.scaled(BaseScalar(scale));
}

Polynomial unit_monomial(Field field, const Exponent& e) {
  return Polynomial::monomial(field, e, BaseScalar::one(field));
}

}  // namespace

Polynomial Polynomial::constant(Field field, std::size_t arity, const BaseScalar& c) {
  Polynomial out(field, arity);
  if (!c.is_zero()) out.terms_.push_back({Exponent(arity, 0), c});
  return out;
}

Polynomial Polynomial::monomial(Field field, const Exponent& e, const BaseScalar& c) {
  Polynomial out(field, e.size());
  if (!c.is_zero()) out.terms_.push_back({e, c});
  return out;
}

Polynomial Polynomial::variable(Field field, std::size_t arity, std::size_t index) {
  Exponent e(arity, 0);
  e.at(index) = 1;
  return monomial(field, e, BaseScalar::one(field));
}

Polynomial Polynomial::from_terms(Field field, std::size_t arity, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_right_lex(a.exponent, b.exponent) < 0;
  });
  Polynomial out(field, arity);
  for (auto& t : terms) {
    if (t.exponent.size() != arity) throw FieldMismatch("term arity does not match polynomial");
    if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
      out.terms_.back().coefficient += t.coefficient;
      if (out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_[0].exponent.begin(), terms_[0].exponent.end(),
                      [](int e) { return e == 0; }));
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
  if (!(field_ == rhs.field_) || arity_ != rhs.arity_) {
    throw FieldMismatch("polynomials over different fields or tower arities");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.field_, a.arity_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    int c = ia == a.terms_.end()   ? 1
            : ib == b.terms_.end() ? -1
                                   : compare_right_lex(ia->exponent, ib->exponent);
    if (c < 0) {
      out.terms_.push_back(*ia++);
    } else if (c > 0) {
      out.terms_.push_back(*ib++);
    } else {
      BaseScalar s = ia->coefficient + ib->coefficient;
      if (!s.is_zero()) out.terms_.push_back({ia->exponent, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.arity_);
  if (a.is_monomial()) return b.shifted(a.lowest().exponent).scaled(a.lowest().coefficient);
  if (b.is_monomial()) return a.shifted(b.lowest().exponent).scaled(b.lowest().coefficient);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      products.push_back({add_exponents(ta.exponent, tb.exponent), ta.coefficient * tb.coefficient});
    }
  }
  return Polynomial::from_terms(a.field_, a.arity_, std::move(products));
}

Polynomial Polynomial::scaled(const BaseScalar& c) const {
  if (c.is_zero()) return Polynomial(field_, arity_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

Polynomial Polynomial::shifted(const Exponent& e) const {
  Polynomial out = *this;
  for (auto& t : out.terms_) {
    for (std::size_t k = 0; k < arity_; ++k) {
      t.exponent[k] += e[k];
      if (t.exponent[k] < 0) throw DomainError("monomial shift leaves the polynomial ring");
    }
  }
  return out;  // a shift preserves the right-lex order of terms
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (!(field_ == rhs.field_) || arity_ != rhs.arity_ || terms_.size() != rhs.terms_.size()) {
    return false;
  }
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].exponent != rhs.terms_[k].exponent ||
        !(terms_[k].coefficient == rhs.terms_[k].coefficient)) {
      return false;
    }
  }
  return true;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.exponent[var]);
  return d;
}

Polynomial Polynomial::coefficient_in(std::size_t var, int d) const {
  std::vector<Term> picked;
  for (const auto& t : terms_) {
    if (t.exponent[var] == d) {
      Term c = t;
      c.exponent[var] = 0;
      picked.push_back(std::move(c));
    }
  }
  return from_terms(field_, arity_, std::move(picked));
}

Exponent Polynomial::min_exponent() const {
  if (terms_.empty()) return Exponent(arity_, 0);
  Exponent m = terms_.front().exponent;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < arity_; ++k) m[k] = std::min(m[k], t.exponent[k]);
  }
  return m;
}

Polynomial Polynomial::embedded(std::size_t arity) const {
  if (arity < arity_) throw FieldMismatch("cannot embed into a shorter tower");
  Polynomial out(field_, arity);
  for (const auto& t : terms_) {
    Exponent e = t.exponent;
    e.resize(arity, 0);
    out.terms_.push_back({std::move(e), t.coefficient});
  }
  // zero-padding keeps right-lex order: the new leading coordinates are equal
  return out;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  Polynomial quotient(a.field(), a.arity());
  if (a.is_zero()) return quotient;
  if (b.is_monomial()) {
    Exponent neg = b.lowest().exponent;
    for (int& e : neg) e = -e;
    return a.shifted(neg).scaled(b.lowest().coefficient.inverse());
  }
  const Term& lead_b = b.highest();
  BaseScalar inv_lead = lead_b.coefficient.inverse();
  Polynomial rem = a;
  std::vector<Term> q_terms;
  while (!rem.is_zero()) {
    const Term& lead_r = rem.highest();
    if (!divides_exponent(lead_b.exponent, lead_r.exponent)) {
      throw DomainError("polynomial division is not exact");
    }
    Exponent e(a.arity());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = lead_r.exponent[k] - lead_b.exponent[k];
    BaseScalar c = lead_r.coefficient * inv_lead;
    rem = rem - b.shifted(e).scaled(c);
    q_terms.push_back({std::move(e), std::move(c)});
  }
  return Polynomial::from_terms(a.field(), a.arity(), std::move(q_terms));
}

namespace {

// Pseudo-remainder of a by b viewed as univariate in t_var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  int db = b.degree_in(var);
  Polynomial lc_b = b.coefficient_in(var, db);
  Polynomial rem = a;
  while (!rem.is_zero() && rem.degree_in(var) >= db) {
    int dr = rem.degree_in(var);
    Polynomial lc_r = rem.coefficient_in(var, dr);
    Exponent shift(a.arity(), 0);
    shift[var] = dr - db;
    rem = lc_b * rem - lc_r * b.shifted(shift);
  }
  return rem;
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b, std::size_t nvars);

// gcd of the coefficients of p in t_var; involves only t_1..t_var.
Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial c(p.field(), p.arity());
  for (int d = p.degree_in(var); d >= 0; --d) {
    Polynomial coeff = p.coefficient_in(var, d);
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? monic(coeff) : gcd_recursive(c, coeff, var);
    if (c.is_constant()) break;
  }
  return c;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  return divide_exact(p, content_in(p, var));
}

// Both inputs involve only t_1..t_nvars.
Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b, std::size_t nvars) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (nvars == 0 || a.is_constant() || b.is_constant()) {
    return Polynomial::constant(a.field(), a.arity(), BaseScalar::one(a.field()));
  }
  std::size_t var = nvars - 1;
  int da = a.degree_in(var);
  int db = b.degree_in(var);
  if (da == 0 && db == 0) return gcd_recursive(a, b, var);
  if (da == 0) return gcd_recursive(a, content_in(b, var), var);
  if (db == 0) return gcd_recursive(content_in(a, var), b, var);

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial content = gcd_recursive(ca, cb, var);
  Polynomial p = numeric_primitive(divide_exact(a, ca));
  Polynomial q = numeric_primitive(divide_exact(b, cb));
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  Polynomial g = q;
  for (;;) {
    Polynomial r = pseudo_remainder(p, q, var);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = Polynomial::constant(a.field(), a.arity(), BaseScalar::one(a.field()));
      break;
    }
    p = std::move(q);
    q = numeric_primitive(primitive_part(numeric_primitive(r), var));
  }
  return monic(content * primitive_part(g, var));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  Exponent ma = a.min_exponent();
  Exponent mb = b.min_exponent();
  Exponent m(a.arity());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(ma[k], mb[k]);
  Polynomial shared = unit_monomial(a.field(), m);
  if (a.is_monomial() || b.is_monomial()) return shared;
  Exponent neg_a = ma;
  Exponent neg_b = mb;
  for (auto& e : neg_a) e = -e;
  for (auto& e : neg_b) e = -e;
  Polynomial rest = gcd_recursive(a.shifted(neg_a), b.shifted(neg_b), a.arity());
  return monic(rest * shared);
}

std::optional<Polynomial> sqrt_exact(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Term& low = p.lowest();
  Exponent half(p.arity());
  for (std::size_t k = 0; k < half.size(); ++k) {
    if (low.exponent[k] % 2 != 0) return std::nullopt;
    half[k] = low.exponent[k] / 2;
  }
  auto c = sqrt_exact(low.coefficient);
  if (!c) return std::nullopt;
  std::vector<int> max_half(p.arity(), 0);
  for (std::size_t k = 0; k < max_half.size(); ++k) max_half[k] = p.degree_in(k) / 2;

  BaseScalar two_c = *c + *c;
  Polynomial root = Polynomial::monomial(p.field(), half, *c);
  for (;;) {
    Polynomial rem = p - root * root;
    if (rem.is_zero()) return root;
    const Term& next = rem.lowest();
    Exponent e(p.arity());
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = next.exponent[k] - half[k];
      if (e[k] < 0 || e[k] > max_half[k]) return std::nullopt;
    }
    root = root + Polynomial::monomial(p.field(), e, next.coefficient / two_c);
  }
}

}  // namespace quatinv
