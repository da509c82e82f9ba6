#include "quatinv/witness.hpp"

#include "quatinv/errors.hpp"

namespace quatinv {

ClassMask class_of(const ArmatureElement& x) {
  if (!x.is_monomial()) throw ContractViolation("expected a single-class element, got " + x.to_string());
  return x.leading_class();
}

LaurentScalar coefficient_of(const ArmatureElement& x) { return x[class_of(x)]; }

LaurentScalar square_scalar(const ArmatureElement& x) {
  ArmatureElement sq = multiply(x, x);
  for (ClassMask a : sq.support()) {
    if (a != 0) throw ContractViolation("square of " + x.to_string() + " is not central");
  }
  return sq[0];
}

namespace {

int eigen_sign(const ArmatureElement& x) {
  ArmatureElement tx = apply_involution(x);
  if (tx == x) return 1;
  if (tx == -x) return -1;
  throw ContractViolation("involution does not fix " + x.to_string() + " up to sign");
}

}  // namespace

WitnessFactor make_factor(ArmatureElement i, ArmatureElement j) {
  WitnessFactor f;
  f.algebra = QuatAlg(square_scalar(i), square_scalar(j));
  f.sign_i = eigen_sign(i);
  f.sign_j = eigen_sign(j);
  f.twist = twist_for_signs(f.sign_i, f.sign_j);
  f.i = std::move(i);
  f.j = std::move(j);
  return f;
}

std::vector<bool> DecompositionWitness::split_flags() const {
  std::vector<bool> out;
  for (const auto& f : factors) out.push_back(is_split(f.algebra));
  return out;
}

std::size_t DecompositionWitness::split_count() const {
  std::size_t n = 0;
  for (bool b : split_flags()) n += b ? 1 : 0;
  return n;
}

WitnessReport verify(const DecompositionWitness& w) {
  WitnessReport r;
  auto fail = [&](std::string msg) { r.failures.push_back(std::move(msg)); };
  if (!w.source) {
    fail("witness has no source presentation");
    return r;
  }
  std::size_t k = w.factors.size();
  if ((std::size_t{1} << (2 * k)) != w.source->group_size()) {
    fail("dimension: " + std::to_string(k) + " factors for " + std::to_string(w.source->generators()) +
         " generators");
  }
  std::vector<ClassMask> classes;
  for (std::size_t n = 0; n < k; ++n) {
    const WitnessFactor& f = w.factors[n];
    std::string tag = "factor " + std::to_string(n) + ": ";
    for (const ArmatureElement* x : {&f.i, &f.j}) {
      if (x->presentation() != w.source && !(x->pres() == *w.source)) {
        fail(tag + "image lives in another presentation");
        return r;
      }
      if (!x->is_monomial()) {
        fail(tag + "image " + x->to_string() + " is not a single class");
      } else {
        classes.push_back(x->leading_class());
      }
    }
    ArmatureElement one = ArmatureElement::one(f.i.presentation());
    if (!(multiply(f.i, f.i) == f.algebra.a * one)) fail(tag + "i^2 != " + f.algebra.a.to_string());
    if (!(multiply(f.j, f.j) == f.algebra.b * one)) fail(tag + "j^2 != " + f.algebra.b.to_string());
    if (f.algebra.a.is_zero() || f.algebra.b.is_zero()) fail(tag + "zero square");
    if (!(multiply(f.i, f.j) + multiply(f.j, f.i)).is_zero()) fail(tag + "i and j do not anticommute");
    if (!(apply_involution(f.i) == LaurentScalar::from_int(w.source->field(), w.source->arity(), f.sign_i) * f.i)) {
      fail(tag + "involution sign on i");
    }
    if (!(apply_involution(f.j) == LaurentScalar::from_int(w.source->field(), w.source->arity(), f.sign_j) * f.j)) {
      fail(tag + "involution sign on j");
    }
    if (f.twist != twist_for_signs(f.sign_i, f.sign_j)) fail(tag + "twist disagrees with the signs");
    for (std::size_t m = n + 1; m < k; ++m) {
      const WitnessFactor& g = w.factors[m];
      for (const ArmatureElement* x : {&f.i, &f.j}) {
        for (const ArmatureElement* y : {&g.i, &g.j}) {
          if (!(multiply(*x, *y) == multiply(*y, *x))) {
            fail("factors " + std::to_string(n) + " and " + std::to_string(m) + " do not commute");
          }
        }
      }
    }
  }
  if (span_basis(classes).size() != classes.size()) fail("image classes are dependent");
  return r;
}

DecompositionWitness standard_witness(PresentationPtr source) {
  if (source->generators() % 2 != 0) throw DomainError("odd generator count");
  DecompositionWitness w;
  w.source = source;
  for (std::size_t k = 0; k + 1 < source->generators(); k += 2) {
    w.factors.push_back(make_factor(ArmatureElement::basis(source, ClassMask{1} << k),
                                    ArmatureElement::basis(source, ClassMask{1} << (k + 1))));
  }
  return w;
}

bool is_hyperbolic(const WitnessFactor& f) {
  if (!is_split(f.algebra)) return false;
  if (f.twist == 0) return true;
  LaurentScalar u2 = f.twist == 1 ? f.algebra.a : f.twist == 2 ? f.algebra.b : -(f.algebra.a * f.algebra.b);
  return is_square(u2);
}

std::string twist_name(int twist) {
  static const char* names[] = {"1", "i", "j", "ij"};
  return names[twist & 3];
}

}  // namespace quatinv
