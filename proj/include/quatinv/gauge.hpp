#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quatinv/armature.hpp"
#include "quatinv/structure_algebra.hpp"

namespace quatinv {

// g(sum c_a x_a) = min_a (v(c_a) + grade(a)), grade(a) = v(x_a^2)/2.
class ArmatureGauge {
 public:
  explicit ArmatureGauge(PresentationPtr pres);

  const PresentationPtr& presentation() const { return pres_; }
  const ArmaturePresentation& pres() const { return *pres_; }
  const GammaValue& grade(ClassMask a) const { return grades_.at(a); }
  const std::vector<GammaValue>& grades() const { return grades_; }
  GammaValue eval(const ArmatureElement& x) const;

  // The grade map modulo Z^n: a -> bits of the half-integral coordinates.
  unsigned grade_class(ClassMask a) const { return grades_[a].residue_bits(); }
  std::size_t image_size() const;
  bool homomorphism_law() const;  // grade_class(a+b) = grade_class(a) xor grade_class(b)

  // Uniqueness of special gauges needs an anisotropic involution, which is
  // not decided here; every gauge records the assumption.
  bool anisotropy_assumed() const { return true; }

 private:
  PresentationPtr pres_;
  std::vector<GammaValue> grades_;
};

GammaValue gauge_eval(const ArmatureGauge& G, const ArmatureElement& x);

struct Violation {
  std::string check;
  std::string detail;
};

struct GaugeCheckReport {
  std::size_t class_checks = 0;
  std::size_t sample_checks = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// g(xy) >= g(x) + g(y): every class pair, then each sampled pair.
GaugeCheckReport check_surmultiplicative(const ArmatureGauge& G,
                                         const std::vector<std::pair<ArmatureElement, ArmatureElement>>& samples);
// g(theta(x)) = g(x) on classes and samples; g(theta(x) x) = 2 g(x) on samples
// and on every class.
GaugeCheckReport check_special(const ArmatureGauge& G, const std::vector<ArmatureElement>& samples);

struct ResidueReport {
  std::vector<ClassMask> kernel;        // every class of C0, ascending
  std::vector<ClassMask> kernel_basis;  // greedy lowest-first basis
  std::size_t image_size = 0;
  std::size_t group_size = 0;
  // Generator k of `residue` lifts to t^{-lift_shift[k]} x_{kernel_basis[k]}.
  std::vector<Exponent> lift_shift;
  // Sub-class s of `residue` lifts to kappa[s] * x_{parent[s]} before the shifts.
  std::vector<ClassMask> parent;
  std::vector<LaurentScalar> kappa;
  ArmaturePresentation residue;  // over the base field
  bool cardinality_law() const { return kernel.size() * image_size == group_size; }
};
ResidueReport kernel_and_residue(const ArmatureGauge& G);

// Residue of a single-class element c x_a with a in C0 and g(c x_a) = 0, as an
// element of the residue presentation. Throws ContractViolation otherwise.
ArmatureElement project_to_residue(const ResidueReport& R, const PresentationPtr& target,
                                   const ArmatureElement& x);

bool check_semisimple_degree0(const ResidueReport& R);

// Searches the center of the degree-0 algebra for a nontrivial idempotent
// (1 + x_a / mu) / 2 with a in the radical of the pairing and x_a^2 = mu^2.
// The center is the twisted group algebra of the radical, which is a field
// exactly when no such a exists, so the search is complete.
struct IdempotentWitness {
  ClassMask radical_class = 0;
  BaseScalar mu;
  std::vector<BaseScalar> z;
};
std::optional<IdempotentWitness> find_central_idempotent(const ArmaturePresentation& residue);

}  // namespace quatinv
