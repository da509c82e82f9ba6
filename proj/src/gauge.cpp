#include "quatinv/gauge.hpp"

#include <exception>
#include <set>

#include "quatinv/errors.hpp"

namespace quatinv {

ArmatureGauge::ArmatureGauge(PresentationPtr pres) : pres_(std::move(pres)) {
  grades_.reserve(pres_->group_size());
  for (ClassMask a = 0; a < pres_->group_size(); ++a) {
    // v(x_a^2) / 2, stored doubled: twice = v(x_a^2)
    grades_.push_back(GammaValue::from_twice(valuation_exponent(pres_->class_square(a))));
  }
}

GammaValue ArmatureGauge::eval(const ArmatureElement& x) const {
  GammaValue best = GammaValue::infinity(pres_->arity());
  for (ClassMask a : x.support()) best = min(best, valuation(x[a]) + grades_[a]);
  return best;
}

std::size_t ArmatureGauge::image_size() const {
  std::set<unsigned> image;
  for (ClassMask a = 0; a < grades_.size(); ++a) image.insert(grade_class(a));
  return image.size();
}

bool ArmatureGauge::homomorphism_law() const {
  for (ClassMask a = 0; a < grades_.size(); ++a) {
    for (ClassMask b = 0; b < grades_.size(); ++b) {
      if (grade_class(a ^ b) != (grade_class(a) ^ grade_class(b))) return false;
    }
  }
  return true;
}

GammaValue gauge_eval(const ArmatureGauge& G, const ArmatureElement& x) { return G.eval(x); }

namespace {

// Runs check(k) for k in [0, n) in parallel; messages land in per-index
// slots so the report order never depends on scheduling.
template <class F>
std::vector<Violation> parallel_checks(std::size_t n, F check) {
  std::vector<std::optional<Violation>> slots(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(n); ++k) {
    try {
      slots[static_cast<std::size_t>(k)] = check(static_cast<std::size_t>(k));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Violation> out;
  for (auto& s : slots) {
    if (s) out.push_back(*s);
  }
  return out;
}

std::string class_label(ClassMask a) { return "class " + std::to_string(a); }

}  // namespace

GaugeCheckReport check_surmultiplicative(const ArmatureGauge& G,
                                         const std::vector<std::pair<ArmatureElement, ArmatureElement>>& samples) {
  GaugeCheckReport report;
  const ArmaturePresentation& P = G.pres();
  std::size_t N = P.group_size();
  report.class_checks = N * N;
  report.violations = parallel_checks(N * N, [&](std::size_t k) -> std::optional<Violation> {
    ClassMask a = static_cast<ClassMask>(k / N), b = static_cast<ClassMask>(k % N);
    GammaValue lhs = valuation(P.cocycle(a, b)) + G.grade(a ^ b);
    GammaValue rhs = G.grade(a) + G.grade(b);
    if (lhs < rhs) {
      return Violation{"surmultiplicative",
                       class_label(a) + " x " + class_label(b) + ": " + lhs.to_string() + " < " + rhs.to_string()};
    }
    return std::nullopt;
  });
  report.sample_checks = samples.size();
  auto more = parallel_checks(samples.size(), [&](std::size_t k) -> std::optional<Violation> {
    const auto& [x, y] = samples[k];
    GammaValue lhs = G.eval(multiply_serial(x, y));
    GammaValue rhs = G.eval(x) + G.eval(y);
    if (lhs < rhs) {
      return Violation{"surmultiplicative", "sample " + std::to_string(k) + ": " + lhs.to_string() + " < " +
                                                rhs.to_string() + " for x = " + x.to_string()};
    }
    return std::nullopt;
  });
  report.violations.insert(report.violations.end(), more.begin(), more.end());
  return report;
}

GaugeCheckReport check_special(const ArmatureGauge& G, const std::vector<ArmatureElement>& samples) {
  GaugeCheckReport report;
  const ArmaturePresentation& P = G.pres();
  std::size_t N = P.group_size();
  report.class_checks = N;
  report.violations = parallel_checks(N, [&](std::size_t k) -> std::optional<Violation> {
    ClassMask a = static_cast<ClassMask>(k);
    // theta(x_a) x_a = eps(a) x_a^2, a scalar of value 2 grade(a)
    GammaValue lhs = valuation(P.class_square(a));
    GammaValue rhs = G.grade(a) + G.grade(a);
    if (!(lhs == rhs)) return Violation{"special", class_label(a) + ": " + lhs.to_string() + " != " + rhs.to_string()};
    return std::nullopt;
  });
  report.sample_checks = samples.size();
  auto more = parallel_checks(samples.size(), [&](std::size_t k) -> std::optional<Violation> {
    const ArmatureElement& x = samples[k];
    ArmatureElement tx = apply_involution(x);
    GammaValue gx = G.eval(x);
    GammaValue gtx = G.eval(tx);
    if (!(gtx == gx)) {
      return Violation{"invariant", "sample " + std::to_string(k) + ": g(theta(x)) = " + gtx.to_string() +
                                        " but g(x) = " + gx.to_string()};
    }
    GammaValue lhs = G.eval(multiply_serial(tx, x));
    if (!(lhs == gx + gx)) {
      return Violation{"special", "sample " + std::to_string(k) + ": g(theta(x)x) = " + lhs.to_string() +
                                      " but 2g(x) = " + (gx + gx).to_string() + " for x = " + x.to_string()};
    }
    return std::nullopt;
  });
  report.violations.insert(report.violations.end(), more.begin(), more.end());
  return report;
}

ResidueReport kernel_and_residue(const ArmatureGauge& G) {
  const ArmaturePresentation& P = G.pres();
  ResidueReport R;
  R.group_size = P.group_size();
  R.image_size = G.image_size();
  for (ClassMask a = 0; a < P.group_size(); ++a) {
    if (G.grade(a).is_integral()) R.kernel.push_back(a);
  }
  R.kernel_basis = span_basis(R.kernel);
  SubPresentation sub = subgroup_presentation(P, R.kernel_basis);
  R.parent = sub.parent;
  R.kappa = sub.kappa;
  if (R.kernel_basis.empty()) {
    R.residue = ArmaturePresentation(P.field(), 0);
    return R;
  }
  std::vector<LaurentScalar> squares;
  for (std::size_t k = 0; k < R.kernel_basis.size(); ++k) {
    const LaurentScalar& sq = sub.pres.squares()[k];
    Exponent v = valuation_exponent(sq);
    Exponent shift(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) shift[c] = v[c] / 2;
    R.lift_shift.push_back(shift);
    squares.push_back(LaurentScalar::from_base(leading_coefficient(sq), 0));
  }
  R.residue = ArmaturePresentation(squares, sub.pres.minus_rows(), sub.pres.signs());
  return R;
}

ArmatureElement project_to_residue(const ResidueReport& R, const PresentationPtr& target,
                                   const ArmatureElement& x) {
  if (!x.is_monomial()) throw ContractViolation("projection needs a single-class element: " + x.to_string());
  ClassMask a = x.leading_class();
  std::size_t s = 0;
  while (s < R.parent.size() && R.parent[s] != a) ++s;
  if (s == R.parent.size()) throw ContractViolation("class " + std::to_string(a) + " is not in the gauge kernel");
  // x_a = t^{sum of shifts} / kappa(s) * (lifted word of s)
  LaurentScalar c = x[a] / R.kappa[s];
  Exponent shift(x.pres().arity(), 0);
  for (std::size_t k = 0; k < R.lift_shift.size(); ++k) {
    if ((s >> k) & 1u) {
      for (std::size_t m = 0; m < shift.size(); ++m) shift[m] += R.lift_shift[k][m];
    }
  }
  c = scale_monomial(c, BaseScalar::one(c.field()), shift);
  if (!valuation(c).is_zero()) {
    throw ContractViolation("element " + x.to_string() + " does not have degree 0");
  }
  return ArmatureElement::basis(target, static_cast<ClassMask>(s), LaurentScalar::from_base(residue(c), 0));
}

bool check_semisimple_degree0(const ResidueReport& R) {
  return is_semisimple(StructureAlgebra::from_presentation(R.residue));
}

std::optional<IdempotentWitness> find_central_idempotent(const ArmaturePresentation& residue) {
  if (residue.arity() != 0) throw DomainError("idempotent search needs a presentation over the base field");
  if (residue.generators() == 0) return std::nullopt;
  std::vector<ClassMask> rad = radical(residue.form());
  StructureAlgebra A = StructureAlgebra::from_presentation(residue);
  Field F = residue.field();
  for (std::size_t mask = 1; mask < (std::size_t{1} << rad.size()); ++mask) {
    ClassMask a = 0;
    for (std::size_t k = 0; k < rad.size(); ++k) {
      if ((mask >> k) & 1u) a ^= rad[k];
    }
    BaseScalar sq = residue.class_square(a).constant_value();
    auto mu = sqrt_exact(sq);
    if (!mu) continue;
    IdempotentWitness w;
    w.radical_class = a;
    w.mu = *mu;
    w.z.assign(A.dim, BaseScalar::zero(F));
    BaseScalar half = BaseScalar::one(F) / BaseScalar(F, 2);
    w.z[0] = half;
    w.z[a] = half / *mu;
    if (!is_central_idempotent(A, w.z)) throw ContractViolation("idempotent candidate failed verification");
    return w;
  }
  return std::nullopt;
}

}  // namespace quatinv
