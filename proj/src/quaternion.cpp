#include "quatinv/quaternion.hpp"

#include "quatinv/errors.hpp"
#include "quatinv/linalg.hpp"

namespace quatinv {

QuatAlg::QuatAlg(LaurentScalar a_, LaurentScalar b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.is_zero() || b.is_zero()) throw DomainError("quaternion structure constants must be nonzero");
  if (!(a.field() == b.field()) || a.arity() != b.arity()) {
    throw FieldMismatch("quaternion structure constants over different towers");
  }
}

std::string QuatAlg::symbol(const TowerNames& names) const {
  return "(" + a.to_compact_string(names) + ", " + b.to_compact_string(names) + ")";
}

QuatElem::QuatElem(QuatAlg alg, std::array<LaurentScalar, 4> x) : alg_(std::move(alg)), x_(std::move(x)) {
  for (const auto& c : x_) {
    if (!(c.field() == alg_.field()) || c.arity() != alg_.arity()) {
      throw FieldMismatch("quaternion coordinate over a different tower");
    }
  }
}

QuatElem QuatElem::zero(const QuatAlg& alg) {
  LaurentScalar z(alg.field(), alg.arity());
  return QuatElem(alg, {z, z, z, z});
}

QuatElem QuatElem::scalar(const QuatAlg& alg, const LaurentScalar& c) {
  QuatElem e = zero(alg);
  e.x_[0] = c;
  return e;
}

QuatElem QuatElem::basis(const QuatAlg& alg, int k) {
  QuatElem e = zero(alg);
  e.x_.at(k) = LaurentScalar::from_int(alg.field(), alg.arity(), 1);
  return e;
}

bool QuatElem::is_zero() const {
  return x_[0].is_zero() && x_[1].is_zero() && x_[2].is_zero() && x_[3].is_zero();
}

bool QuatElem::is_scalar() const { return x_[1].is_zero() && x_[2].is_zero() && x_[3].is_zero(); }

QuatElem QuatElem::operator-() const {
  QuatElem r = *this;
  for (auto& c : r.x_) c = -c;
  return r;
}

QuatElem operator+(const QuatElem& x, const QuatElem& y) {
  if (!(x.alg_ == y.alg_)) throw FieldMismatch("quaternions from different algebras");
  QuatElem r = x;
  for (int k = 0; k < 4; ++k) r.x_[k] = x.x_[k] + y.x_[k];
  return r;
}

QuatElem operator-(const QuatElem& x, const QuatElem& y) { return x + (-y); }

QuatElem operator*(const LaurentScalar& c, const QuatElem& x) {
  QuatElem r = x;
  for (auto& v : r.x_) v = c * v;
  return r;
}

QuatElem operator*(const QuatElem& x, const QuatElem& y) {
  if (!(x.alg_ == y.alg_)) throw FieldMismatch("quaternions from different algebras");
  const LaurentScalar& a = x.alg_.a;
  const LaurentScalar& b = x.alg_.b;
  LaurentScalar ab = a * b;
  const auto& p = x.x_;
  const auto& q = y.x_;
  QuatElem r = x;
  r.x_[0] = p[0] * q[0] + a * (p[1] * q[1]) + b * (p[2] * q[2]) - ab * (p[3] * q[3]);
  r.x_[1] = p[0] * q[1] + p[1] * q[0] - b * (p[2] * q[3]) + b * (p[3] * q[2]);
  r.x_[2] = p[0] * q[2] + p[2] * q[0] + a * (p[1] * q[3]) - a * (p[3] * q[1]);
  r.x_[3] = p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1];
  return r;
}

std::string QuatElem::to_string(const TowerNames& names) const {
  static const char* labels[4] = {"", "i", "j", "ij"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (x_[k].is_zero()) continue;
    std::string c = x_[k].to_string(names);
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += c;
    } else if (c == "1") {
      out += labels[k];
    } else {
      out += "(" + c + ")" + labels[k];
    }
  }
  return out.empty() ? "0" : out;
}

QuatElem multiply(const QuatElem& x, const QuatElem& y) { return x * y; }

QuatElem canonical_conjugate(const QuatElem& x) {
  QuatElem r = -x;
  return r + QuatElem::scalar(x.algebra(), x[0] + x[0]);
}

LaurentScalar reduced_norm(const QuatElem& x) {
  const LaurentScalar& a = x.algebra().a;
  const LaurentScalar& b = x.algebra().b;
  return x[0] * x[0] - a * (x[1] * x[1]) - b * (x[2] * x[2]) + a * b * (x[3] * x[3]);
}

LaurentScalar reduced_trace(const QuatElem& x) { return x[0] + x[0]; }

QuatElem inverse(const QuatElem& x) {
  LaurentScalar n = reduced_norm(x);
  if (n.is_zero()) throw DomainError("quaternion " + x.to_string() + " is not invertible");
  return n.inverse() * canonical_conjugate(x);
}

QuatInvolution::QuatInvolution(QuatAlg alg, QuatElem twist)
    : alg_(std::move(alg)), u_(std::move(twist)) {
  if (!(u_.algebra() == alg_)) throw FieldMismatch("twist from another algebra");
  if (!u_.is_scalar() && !u_.is_pure()) {
    throw DomainError("twist must be central or pure, got " + u_.to_string());
  }
  u_inv_ = inverse(u_);
}

QuatInvolution QuatInvolution::canonical(const QuatAlg& alg) {
  return QuatInvolution(alg, QuatElem::basis(alg, 0));
}

QuatInvolution QuatInvolution::basis_twist(const QuatAlg& alg, int k) {
  return QuatInvolution(alg, QuatElem::basis(alg, k));
}

QuatElem QuatInvolution::apply(const QuatElem& x) const {
  if (!(x.algebra() == alg_)) throw FieldMismatch("element from another algebra");
  return u_ * canonical_conjugate(x) * u_inv_;
}

int QuatInvolution::sign_on_basis(int k) const {
  QuatElem e = QuatElem::basis(alg_, k);
  QuatElem img = apply(e);
  if (img == e) return 1;
  if (img == -e) return -1;
  return 0;
}

QuatElem apply_involution(const QuatInvolution& theta, const QuatElem& x) { return theta.apply(x); }

SquareClass involution_discriminant(const QuatInvolution& theta, std::uint64_t bound) {
  if (theta.is_symplectic()) throw DomainError("discriminant of a symplectic involution");
  return square_class(-reduced_norm(theta.twist()), bound);
}

std::vector<QuatElem> anticommutant(const QuatElem& e) {
  const QuatAlg& alg = e.algebra();
  LaurentScalar zero(alg.field(), alg.arity());
  LaurentScalar one = LaurentScalar::from_int(alg.field(), alg.arity(), 1);
  Matrix<LaurentScalar> m(4, std::vector<LaurentScalar>(4, zero));
  for (int k = 0; k < 4; ++k) {
    QuatElem b = QuatElem::basis(alg, k);
    QuatElem s = b * e + e * b;
    for (int r = 0; r < 4; ++r) m[r][k] = s[r];
  }
  std::vector<QuatElem> out;
  for (auto& v : nullspace(m, 4, zero, one)) out.emplace_back(alg, std::array<LaurentScalar, 4>{v[0], v[1], v[2], v[3]});
  return out;
}

bool verify_generator_map(const QuatElem& i, const QuatElem& j, const QuatAlg& target) {
  const QuatAlg& alg = i.algebra();
  if (!(j.algebra() == alg)) return false;
  if (!(i * i == QuatElem::scalar(alg, target.a))) return false;
  if (!(j * j == QuatElem::scalar(alg, target.b))) return false;
  QuatElem ij = i * j;
  if (!(ij == -(j * i))) return false;
  QuatElem one = QuatElem::basis(alg, 0);
  Matrix<LaurentScalar> m;
  for (const QuatElem* e : std::array<const QuatElem*, 4>{&one, &i, &j, &ij}) {
    m.push_back({(*e)[0], (*e)[1], (*e)[2], (*e)[3]});
  }
  return rank(m) == 4;
}

namespace {

LaurentScalar monomial_t(const BaseScalar& c, std::size_t arity, int power_of_last) {
  Exponent e(arity, 0);
  if (arity > 0) e.back() = power_of_last;
  return LaurentScalar::monomial(c, e);
}

// Rescales x (with x^2 = sq, a scalar) so that its square becomes `want`;
// empty when sq/want has no square root in F(t).
std::optional<QuatElem> rescale_to(const QuatElem& x, const LaurentScalar& sq, const LaurentScalar& want) {
  auto r = sqrt_exact(want / sq);
  if (!r) return std::nullopt;
  return *r * x;
}

}  // namespace

CanonicalForm canonical_form_over_K(const QuatAlg& A, std::uint64_t bound) {
  if (A.arity() != 1) throw DomainError("canonical_form_over_K expects a tower of arity 1");
  Field F = A.field();
  SquareClass ca = square_class(A.a, bound);
  SquareClass cb = square_class(A.b, bound);
  QuatElem i = QuatElem::basis(A, 1);
  QuatElem j = QuatElem::basis(A, 2);
  CanonicalForm out;
  QuatElem gi = i, gj = j;
  LaurentScalar si = A.a, sj = A.b;
  int pa = ca.parity[0], pb = cb.parity[0];
  if (pa == 0 && pb == 0) {
    out.ramified = false;
    out.a = ca.unit;
    out.b = cb.unit;
  } else if (pa == 1 && pb == 0) {
    out.ramified = true;
    out.a = ca.unit;
    out.b = cb.unit;
  } else if (pa == 0 && pb == 1) {
    // (a, b t) = (b t, a) via i' = j, j' = i
    out.ramified = true;
    out.a = cb.unit;
    out.b = ca.unit;
    std::swap(gi, gj);
    std::swap(si, sj);
  } else {
    // (a t, b t) = (a t, -ab): j' = ij, (ij)^2 = -a b
    out.ramified = true;
    out.a = ca.unit;
    out.b = square_class_representative(-(ca.unit * cb.unit), bound);
    gj = i * j;
    sj = -(A.a * A.b);
  }
  LaurentScalar ta = out.ramified ? monomial_t(out.a, 1, 1) : LaurentScalar::from_base(out.a, 1);
  LaurentScalar tb = LaurentScalar::from_base(out.b, 1);
  out.target = QuatAlg(ta, tb);
  auto ri = rescale_to(gi, si, ta);
  auto rj = rescale_to(gj, sj, tb);
  if (ri && rj) out.generators = std::make_pair(*ri, *rj);
  (void)F;
  return out;
}

Lemma31Generators lemma31_generators(const QuatAlg& A, const QuatInvolution& theta, std::uint64_t bound) {
  if (A.arity() != 1) throw DomainError("lemma31_generators expects a tower of arity 1");
  if (!(theta.algebra() == A)) throw FieldMismatch("involution on another algebra");
  CanonicalForm cf = canonical_form_over_K(A, bound);
  if (!cf.ramified) throw ContractViolation("precondition: algebra is defined over F");
  if (is_split(A, bound)) throw ContractViolation("precondition: algebra is split");
  if (theta.is_symplectic()) throw ContractViolation("precondition: involution is symplectic");

  const QuatElem& s = theta.twist();  // pure, theta(s) = -s
  LaurentScalar s2 = -reduced_norm(s);
  SquareClass disc = square_class(s2, bound);
  Lemma31Generators out;
  auto exact = [](std::optional<QuatElem> e, const char* what) {
    if (!e) throw ContractViolation(std::string("generator rescaling needs a square root outside F(t): ") + what);
    return *e;
  };
  auto pick_complement = [&](const QuatElem& e) {
    std::vector<QuatElem> basis = anticommutant(e);
    if (basis.size() != 2) throw ContractViolation("anticommutant is not 2-dimensional");
    for (const QuatElem& v : std::array<QuatElem, 3>{basis[0], basis[1], basis[0] + basis[1]}) {
      if (!reduced_norm(v).is_zero()) return v;
    }
    throw ContractViolation("no invertible element anticommutes with the twist");
  };

  if (disc.parity[0] == 1) {
    out.twist_is_i = true;
    out.a = disc.unit;
    LaurentScalar at = monomial_t(out.a, 1, 1);
    out.i = exact(rescale_to(s, s2, at), "i");
    QuatElem j = pick_complement(out.i);
    LaurentScalar j2 = -reduced_norm(j);
    if (square_class(j2, bound).parity[0] == 1) {
      // j^2 lies in the class b t: substitute i j^{-1}
      j = out.i * inverse(j);
      j2 = -reduced_norm(j);
      out.substituted = true;
    }
    out.b = square_class_representative(leading_coefficient(j2), bound);
    out.j = exact(rescale_to(j, j2, LaurentScalar::from_base(out.b, 1)), "j");
  } else {
    out.twist_is_i = false;
    out.b = disc.unit;
    out.j = exact(rescale_to(s, s2, LaurentScalar::from_base(out.b, 1)), "j");
    QuatElem i = pick_complement(out.j);
    LaurentScalar i2 = -reduced_norm(i);
    SquareClass ci = square_class(i2, bound);
    if (ci.parity[0] != 1) throw ContractViolation("complement of the twist is unramified");
    out.a = ci.unit;
    out.i = exact(rescale_to(i, i2, monomial_t(out.a, 1, 1)), "i");
  }
  return out;
}

}  // namespace quatinv
