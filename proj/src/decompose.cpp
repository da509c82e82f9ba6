#include "quatinv/decompose.hpp"

#include "quatinv/errors.hpp"

namespace quatinv {

namespace {

LaurentScalar t_power(Field f, std::size_t arity, std::size_t var, int e) {
  Exponent ex(arity, 0);
  ex.at(var) = e;
  return LaurentScalar::monomial(BaseScalar::one(f), ex);
}

// t^{-v/2} x for x^2 of even valuation v (all coordinates).
ArmatureElement unit_scaled(const ArmatureElement& x) {
  Exponent v = valuation_exponent(square_scalar(x));
  Exponent half(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] % 2 != 0) throw ContractViolation("square of " + x.to_string() + " has odd valuation");
    half[k] = -v[k] / 2;
  }
  return LaurentScalar::monomial(BaseScalar::one(x.pres().field()), half) * x;
}

std::vector<ClassMask> image_classes(const WitnessFactor& f) { return {class_of(f.i), class_of(f.j)}; }

// Every element of the span of `basis`.
std::vector<ClassMask> span_elements(const std::vector<ClassMask>& basis) {
  std::vector<ClassMask> out{0};
  for (ClassMask b : basis) {
    std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) out.push_back(out[k] ^ b);
  }
  return out;
}

ArmaturePresentation lift_with(const ArmaturePresentation& S, std::size_t arity, LaurentScalar a, LaurentScalar b,
                               std::pair<int, int> signs) {
  if (S.arity() != 0) throw DomainError("lift expects a presentation over the base field");
  std::size_t n = S.generators();
  std::vector<LaurentScalar> squares;
  for (const auto& s : S.squares()) squares.push_back(s.embedded(arity));
  squares.push_back(std::move(a));
  squares.push_back(std::move(b));
  std::vector<ClassMask> minus = S.minus_rows();
  minus.push_back(ClassMask{1} << (n + 1));
  minus.push_back(ClassMask{1} << n);
  std::vector<int> sg = S.signs();
  sg.push_back(signs.first);
  sg.push_back(signs.second);
  return ArmaturePresentation(std::move(squares), std::move(minus), std::move(sg));
}

// Checks that the last two generators have squares (a, b), anticommute with
// each other and commute with everything else, and that the remaining
// squares are constants.
void require_lift_shape(const ArmaturePresentation& P, const LaurentScalar& a, const LaurentScalar& b,
                        const std::string& what) {
  std::size_t n = P.generators();
  if (n < 2) throw ContractViolation("precondition: source is " + what);
  ClassMask top = ClassMask{1} << (n - 1), next = ClassMask{1} << (n - 2);
  bool ok = P.squares()[n - 2] == a && P.squares()[n - 1] == b && P.pairing(top, next) == -1;
  for (std::size_t k = 0; ok && k + 2 < n; ++k) {
    ClassMask g = ClassMask{1} << k;
    ok = P.pairing(g, top) == 1 && P.pairing(g, next) == 1 && P.squares()[k].is_constant();
  }
  if (!ok) throw ContractViolation("precondition: source is " + what);
}

}  // namespace

// ---- lifts -----------------------------------------------------------------

ArmaturePresentation lift_ad_t(const ArmaturePresentation& S) {
  Field f = S.field();
  return lift_with(S, 1, LaurentScalar::from_int(f, 1, 1), LaurentScalar::variable(f, 1, 0), {1, -1});
}

ArmaturePresentation lift_q(const ArmaturePresentation& S, int twist) {
  Field f = S.field();
  return lift_with(S, 2, LaurentScalar::variable(f, 2, 0), LaurentScalar::variable(f, 2, 1), signs_for_twist(twist));
}

DecompositionWitness lift_witness(const DecompositionWitness& w, PresentationPtr lifted) {
  std::size_t n = w.source->generators();
  if (lifted->generators() != n + 2) throw DomainError("lifted presentation has the wrong rank");
  DecompositionWitness out;
  out.source = lifted;
  auto push = [&](const ArmatureElement& x) {
    ClassMask a = class_of(x);
    return ArmatureElement::basis(lifted, a, x[a].embedded(lifted->arity()));
  };
  for (const auto& f : w.factors) out.factors.push_back(make_factor(push(f.i), push(f.j)));
  out.factors.push_back(make_factor(ArmatureElement::basis(lifted, ClassMask{1} << n),
                                    ArmatureElement::basis(lifted, ClassMask{1} << (n + 1))));
  return out;
}

// ---- exchange --------------------------------------------------------------

namespace {

int parity0(const ArmatureElement& x) {
  int e = valuation_exponent(square_scalar(x))[0];
  return ((e % 2) + 2) % 2;
}

}  // namespace

bool is_unramified(const WitnessFactor& f) {
  for (const LaurentScalar* s : {&f.algebra.a, &f.algebra.b}) {
    for (int e : valuation_exponent(*s)) {
      if (e % 2 != 0) return false;
    }
  }
  return true;
}

std::pair<ArmatureElement, ArmatureElement> normalize_ramified(const WitnessFactor& f, int choice) {
  if (f.i.pres().arity() != 1) throw DomainError("factor exchange works over F((t))");
  ArmatureElement x = f.i, y = f.j, xy = multiply(f.i, f.j);
  int px = parity0(x), py = parity0(y);
  ArmatureElement i, j;
  if (px == 1 && py == 0) {
    i = choice ? xy : x;
    j = y;
  } else if (px == 0 && py == 1) {
    i = choice ? xy : y;
    j = x;
  } else if (px == 1 && py == 1) {
    i = choice ? y : x;
    j = xy;
  } else {
    throw ContractViolation("factor " + f.algebra.symbol() + " is unramified");
  }
  Field F = x.pres().field();
  int ei = valuation_exponent(square_scalar(i))[0];
  int ej = valuation_exponent(square_scalar(j))[0];
  i = t_power(F, 1, 0, -(ei - 1) / 2) * i;
  j = t_power(F, 1, 0, -ej / 2) * j;
  LaurentScalar a = square_scalar(i) / LaurentScalar::variable(F, 1, 0);
  LaurentScalar b = square_scalar(j);
  if (!a.is_constant() || !b.is_constant()) {
    throw ContractViolation("factor " + f.algebra.symbol() + " is not of the form (a t, b) with a, b in F");
  }
  return {i, j};
}

std::optional<DecompositionWitness> exchange_factors(const DecompositionWitness& w, std::size_t p, std::size_t q,
                                                     int choice_p, int choice_q) {
  if (p == q || p >= w.factors.size() || q >= w.factors.size()) throw DomainError("bad factor indices");
  if (is_unramified(w.factors[p]) || is_unramified(w.factors[q])) return std::nullopt;
  auto [i1, j1] = normalize_ramified(w.factors[p], choice_p);
  auto [i2, j2] = normalize_ramified(w.factors[q], choice_q);
  Field F = w.source->field();
  DecompositionWitness out = w;
  out.factors[p] = make_factor(t_power(F, 1, 0, -1) * multiply(i1, i2), j1);
  out.factors[q] = make_factor(i2, multiply(j1, j2));
  return out;
}

ExchangeResult lemma32_exchange(const QuatAlg& H1, int twist1, const QuatAlg& H2, int twist2) {
  if (!(H1.field() == H2.field()) || H1.arity() != H2.arity()) {
    throw DomainError("quaternion algebras over different fields");
  }
  if (H1.arity() != 1) throw DomainError("factor exchange works over F((t))");
  auto P = share(ArmaturePresentation::standard({{H1.a, H1.b}, {H2.a, H2.b}},
                                                {signs_for_twist(twist1), signs_for_twist(twist2)}));
  ExchangeResult r;
  r.witness = standard_witness(P);
  auto ex = exchange_factors(r.witness, 0, 1);
  if (ex) {
    r.witness = std::move(*ex);
  } else {
    r.identity = true;
  }
  r.h1 = r.witness.factors[0].algebra;
  r.h2 = r.witness.factors[1].algebra;
  r.twist1 = r.witness.factors[0].twist;
  r.twist2 = r.witness.factors[1].twist;
  return r;
}

// ---- prop31 / thm1 ---------------------------------------------------------

WitnessFactor to_ad_form(const WitnessFactor& f) {
  if (f.twist == 0) throw ContractViolation("factor " + f.algebra.symbol() + " carries a symplectic involution");
  ArmatureElement xy = multiply(f.i, f.j);
  const ArmatureElement* s = nullptr;
  std::vector<const ArmatureElement*> candidates;
  switch (f.twist) {
    case 1:
      s = &f.i;
      candidates = {&f.j, &xy};
      break;
    case 2:
      s = &f.j;
      candidates = {&f.i, &xy};
      break;
    default:
      s = &xy;
      candidates = {&f.i, &f.j};
  }
  for (const ArmatureElement* r : candidates) {
    auto root = sqrt_exact(square_scalar(*r));
    if (root) return make_factor(root->inverse() * *r, *s);
  }
  throw ContractViolation("factor " + f.algebra.symbol() + " has no single-class symmetric element with square 1");
}

Prop31Result prop31_normalize(const DecompositionWitness& D) {
  if (D.source->arity() != 1) throw DomainError("normalization works over F((t))");
  Prop31Result res;
  DecompositionWitness W = D;
  res.split_history.push_back(W.split_count());
  for (;;) {
    std::vector<std::size_t> ram;
    for (std::size_t k = 0; k < W.factors.size(); ++k) {
      if (!is_unramified(W.factors[k])) ram.push_back(k);
    }
    if (ram.size() <= 1) break;
    std::size_t current = res.split_history.back();
    bool found = false;
    for (std::size_t p : ram) {
      for (std::size_t q : ram) {
        if (p == q) continue;
        for (int choice = 0; choice < 4 && !found; ++choice) {
          auto cand = exchange_factors(W, p, q, choice & 1, choice >> 1);
          if (!cand) continue;
          if (is_hyperbolic(cand->factors[p]) || is_hyperbolic(cand->factors[q])) continue;
          std::size_t count = cand->split_count();
          if (count < current) continue;
          W = std::move(*cand);
          res.split_history.push_back(count);
          found = true;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) throw ContractViolation("no exchange keeps the split count without creating a hyperbolic factor");
    ++res.exchanges;
  }
  std::size_t idx = W.factors.size();
  for (std::size_t k = 0; k < W.factors.size(); ++k) {
    if (!is_unramified(W.factors[k])) idx = k;
  }
  if (idx == W.factors.size()) throw ContractViolation("no factor is ramified; the source does not carry t");
  res.residual_index = idx;
  const WitnessFactor& residual = W.factors[idx];
  if (!is_split(residual.algebra)) {
    res.status = Prop31Status::Contradiction;
    res.message = "residual factor " + residual.algebra.symbol() + " is a division algebra";
    res.witness = W;
    return res;
  }
  if (residual.twist == 0) throw ContractViolation("residual factor carries a symplectic involution (hyperbolic)");
  WitnessFactor ad = to_ad_form(residual);
  int e = valuation_exponent(ad.algebra.b)[0];
  if (e % 2 == 0) throw ContractViolation("residual involution has discriminant over F (hyperbolic factor)");
  Field F = D.source->field();
  ArmatureElement s = t_power(F, 1, 0, -(e - 1) / 2) * ad.j;
  ad = make_factor(ad.i, s);
  LaurentScalar a = ad.algebra.b / LaurentScalar::variable(F, 1, 0);
  if (!a.is_constant()) throw ContractViolation("discriminant of the residual factor is not a t F^x class");
  res.a_prime = a.constant_value();
  DecompositionWitness out;
  out.source = W.source;
  out.factors.push_back(ad);
  for (std::size_t k = 0; k < W.factors.size(); ++k) {
    if (k == idx) continue;
    out.factors.push_back(make_factor(unit_scaled(W.factors[k].i), unit_scaled(W.factors[k].j)));
  }
  res.witness = std::move(out);
  return res;
}

DecompositionWitness thm1_descend(const DecompositionWitness& normalized) {
  const PresentationPtr& src = normalized.source;
  Field F = src->field();
  if (src->arity() != 1) throw DomainError("descent works over F((t))");
  require_lift_shape(*src, LaurentScalar::from_int(F, 1, 1), LaurentScalar::variable(F, 1, 0), "S (x) Ad<<t>>");
  ArmatureGauge G(src);
  ResidueReport R = kernel_and_residue(G);
  auto E0 = share(R.residue);
  auto idem = find_central_idempotent(R.residue);
  std::size_t k = E0->generators() - 1;
  ClassMask top = ClassMask{1} << k;
  if (!idem || idem->radical_class != top) {
    throw ContractViolation("degree-0 residue does not split as S x S along the last generator");
  }
  // S: the first k generators of the residue presentation.
  std::vector<LaurentScalar> squares(E0->squares().begin(), E0->squares().begin() + static_cast<long>(k));
  std::vector<ClassMask> minus;
  for (std::size_t g = 0; g < k; ++g) minus.push_back(E0->minus_rows()[g] & (top - 1));
  std::vector<int> signs(E0->signs().begin(), E0->signs().begin() + static_cast<long>(k));
  auto S = squares.empty() ? share(ArmaturePresentation(F, 0)) : share(ArmaturePresentation(squares, minus, signs));
  auto project = [&](const ArmatureElement& x) {
    if (!G.eval(x).is_zero()) {
      throw ContractViolation("generator " + x.to_string() + " has grade " + G.eval(x).to_string());
    }
    ArmatureElement y = project_to_residue(R, E0, x);
    ClassMask b = class_of(y);
    LaurentScalar c = y[b];
    if (b & top) {
      b ^= top;
      c = c * LaurentScalar::from_base(idem->mu, 0);
    }
    return ArmatureElement::basis(S, b, c);
  };
  DecompositionWitness out;
  out.source = S;
  for (std::size_t n = 1; n < normalized.factors.size(); ++n) {
    out.factors.push_back(make_factor(project(normalized.factors[n].i), project(normalized.factors[n].j)));
  }
  return out;
}

// ---- lm22 / lm23 / prop21 / thm2 --------------------------------------------

Lm22Result lm22_residue_split(const PresentationPtr& C) {
  if (C->arity() != 2) throw DomainError("residue split works over F((t1))((t2))");
  ArmatureGauge G(C);
  ResidueReport R = kernel_and_residue(G);
  if (R.image_size != 4) throw ContractViolation("grade map does not reach all of (1/2 Z / Z)^2");
  AlternatingForm form = C->form();
  Lm22Result out;
  std::size_t found = 0;
  for (ClassMask a = 0; a < C->group_size(); ++a) {
    bool central = true;
    for (ClassMask c : R.kernel_basis) central = central && form.pair(a, c) == 0;
    if (!central) continue;
    ++found;
    unsigned g = G.grade_class(a);
    if (g == 1) out.class_i = a;
    if (g == 2) out.class_j = a;
  }
  if (found != 4) throw DegeneratePairing("pairing on the gauge kernel is degenerate", radical(form, R.kernel_basis));
  out.zeta1 = C->involution_sign(out.class_i);
  out.zeta2 = C->involution_sign(out.class_j);
  out.twist = twist_for_signs(out.zeta1, out.zeta2);
  out.residue = R.residue;
  return out;
}

Lm23Result lm23_hermitian_normalize(const LaurentScalar& lambda, int twist) {
  if (lambda.arity() != 2) throw DomainError("hermitian normalization works over F((t1))((t2))");
  if (lambda.is_zero()) throw DomainError("lambda must be nonzero");
  Field F = lambda.field();
  Exponent v = valuation_exponent(lambda);
  int p1 = ((v[0] % 2) + 2) % 2, p2 = ((v[1] % 2) + 2) % 2;
  Lm23Result r;
  r.u = p1 + 2 * p2;  // i^2 = t1, j^2 = t2, (ij)^2 = -t1 t2
  QuatAlg Q(LaurentScalar::variable(F, 2, 0), LaurentScalar::variable(F, 2, 1));
  int zeta = QuatInvolution::basis_twist(Q, twist).sign_on_basis(r.u);
  LaurentScalar u2 = multiply(QuatElem::basis(Q, r.u), QuatElem::basis(Q, r.u))[0];
  r.lambda_shifted = LaurentScalar::from_int(F, 2, zeta) * lambda / u2;
  r.lambda0 = leading_coefficient(r.lambda_shifted);
  return r;
}

bool lm23_oracle(const LaurentScalar& lambda, int twist, const Lm23Result& r) {
  Field F = lambda.field();
  QuatAlg Q(LaurentScalar::variable(F, 2, 0), LaurentScalar::variable(F, 2, 1));
  QuatInvolution theta = QuatInvolution::basis_twist(Q, twist);
  QuatElem u = QuatElem::basis(Q, r.u);
  // e2 -> u^{-1} e2 turns h(e2, e2) = -lambda into -theta(u)^{-1} lambda u^{-1}
  QuatElem shifted = inverse(theta.apply(u)) * QuatElem::scalar(Q, lambda) * inverse(u);
  if (!shifted.is_scalar() || !(shifted[0] == r.lambda_shifted)) return false;
  for (int e : valuation_exponent(r.lambda_shifted)) {
    if (e % 2 != 0) return false;
  }
  return is_square(r.lambda_shifted / LaurentScalar::from_base(r.lambda0, 2));
}

DecompositionWitness prop21_descend(const PresentationPtr& C) {
  ArmatureGauge G(C);
  ResidueReport R = kernel_and_residue(G);
  auto E0 = share(R.residue);
  DecompositionWitness out;
  out.source = E0;
  for (const auto& [a, b] : symplectic_base(E0->form())) {
    out.factors.push_back(make_factor(ArmatureElement::basis(E0, a), ArmatureElement::basis(E0, b)));
  }
  return out;
}

Thm2Result thm2_descend(const DecompositionWitness& D) {
  const PresentationPtr& src = D.source;
  if (src->arity() != 2) throw DomainError("descent works over F((t1))((t2))");
  Field F = src->field();
  require_lift_shape(*src, LaurentScalar::variable(F, 2, 0), LaurentScalar::variable(F, 2, 1), "S (x) (t1, t2)");
  ArmatureGauge G(src);
  Thm2Result res;
  res.input_split = D.split_count();
  std::vector<WitnessFactor> factors = D.factors;
  std::vector<bool> split = D.split_flags();

  for (std::size_t p = 0; p < factors.size(); ++p) {
    if (!split[p]) continue;
    WitnessFactor ad = to_ad_form(factors[p]);
    ArmatureElement r = ad.i, s = ad.j;
    unsigned gs = G.grade_class(class_of(s));
    if (gs != 0) {
      // Conjugating the hermitian scalar by x_u: s' = s x_u, taken from the
      // other factors so that it commutes with them after the correction.
      std::vector<ClassMask> others;
      for (std::size_t q = 0; q < factors.size(); ++q) {
        if (q == p) continue;
        for (ClassMask c : image_classes(factors[q])) others.push_back(c);
      }
      std::optional<ClassMask> u;
      for (ClassMask c : span_elements(span_basis(others))) {
        if (G.grade_class(c) == gs && (!u || c < *u)) u = c;
      }
      if (!u) throw ContractViolation("no class of the remaining factors matches the grade of " + s.to_string());
      ArmatureElement xu = ArmatureElement::basis(src, *u);
      for (std::size_t q = 0; q < factors.size(); ++q) {
        if (q == p) continue;
        ArmatureElement i = factors[q].i, j = factors[q].j;
        if (src->pairing(class_of(i), *u) == -1) i = multiply(i, r);
        if (src->pairing(class_of(j), *u) == -1) j = multiply(j, r);
        factors[q] = make_factor(i, j);
      }
      s = multiply(s, xu);
      if (src->involution_sign(*u) == -1) s = multiply(r, s);
    }
    s = unit_scaled(s);
    factors[p] = make_factor(r, s);
    res.lambdas.push_back(leading_coefficient(factors[p].algebra.b));
  }

  std::vector<ClassMask> rest;
  for (std::size_t q = 0; q < factors.size(); ++q) {
    if (split[q]) continue;
    for (ClassMask c : image_classes(factors[q])) rest.push_back(c);
  }
  std::vector<ClassMask> rest_basis = span_basis(rest);
  SubPresentation B = subgroup_presentation(*src, rest_basis);
  res.remainder = lm22_residue_split(share(B.pres));

  std::vector<ClassMask> rest0;
  for (ClassMask c : span_elements(rest_basis)) {
    if (G.grade_class(c) == 0) rest0.push_back(c);
  }
  SymplecticBase base = symplectic_base(src->form(), span_basis(rest0));

  ResidueReport R = kernel_and_residue(G);
  auto E0 = share(R.residue);
  auto project = [&](const ArmatureElement& x) { return project_to_residue(R, E0, unit_scaled(x)); };
  DecompositionWitness out;
  out.source = E0;
  for (std::size_t p = 0; p < factors.size(); ++p) {
    if (split[p]) out.factors.push_back(make_factor(project(factors[p].i), project(factors[p].j)));
  }
  for (const auto& [a, b] : base) {
    out.factors.push_back(
        make_factor(project(ArmatureElement::basis(src, a)), project(ArmatureElement::basis(src, b))));
  }
  res.witness = std::move(out);
  return res;
}

}  // namespace quatinv
