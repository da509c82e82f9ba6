#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "quatinv/quaternion.hpp"
#include "quatinv/symplectic.hpp"

namespace quatinv {

// Twisted group algebra on F2^n (n = 2m generators g_1..g_n): g_k^2 =
// squares[k], g_k g_l = P_kl g_l g_k with P_kl = -1 iff bit l of minus[k],
// and the involution theta(g_k) = signs[k] g_k. Class a is represented by
// the ascending word x_a = g_{k1} g_{k2} ... (k1 < k2 < ...).
class ArmaturePresentation {
 public:
  static constexpr std::size_t kMaxGenerators = 16;

  ArmaturePresentation() = default;  // trivial presentation over Q, arity 0
  ArmaturePresentation(Field field, std::size_t arity);
  ArmaturePresentation(std::vector<LaurentScalar> squares, std::vector<ClassMask> minus, std::vector<int> signs);
  // Tensor product of quaternion algebras with signs (one pair per factor);
  // the pairing is block diagonal.
  static ArmaturePresentation standard(const std::vector<std::pair<LaurentScalar, LaurentScalar>>& factors,
                                       const std::vector<std::pair<int, int>>& signs);
  // Explicit field/arity for the empty tensor product.
  static ArmaturePresentation standard(Field field, std::size_t arity,
                                       const std::vector<std::pair<LaurentScalar, LaurentScalar>>& factors,
                                       const std::vector<std::pair<int, int>>& signs);

  Field field() const { return field_; }
  std::size_t arity() const { return arity_; }
  std::size_t generators() const { return squares_.size(); }
  std::size_t group_size() const { return std::size_t{1} << generators(); }
  const std::vector<LaurentScalar>& squares() const { return squares_; }
  const std::vector<ClassMask>& minus_rows() const { return minus_; }
  const std::vector<int>& signs() const { return signs_; }
  AlternatingForm form() const { return AlternatingForm(generators(), minus_); }

  // +1 or -1 from reordering x_a x_b into x_{a+b}.
  int cocycle_sign(ClassMask a, ClassMask b) const;
  // Product of squares[k] over k in c.
  const LaurentScalar& square_product(ClassMask c) const { return lambda_[c]; }
  // beta(a, b) with x_a x_b = beta(a, b) x_{a+b}.
  LaurentScalar cocycle(ClassMask a, ClassMask b) const;
  LaurentScalar class_square(ClassMask a) const { return cocycle(a, a); }
  // <a, b> = x_a x_b x_a^{-1} x_b^{-1} in {+1, -1}.
  int pairing(ClassMask a, ClassMask b) const;
  // theta(x_a) = involution_sign(a) x_a.
  int involution_sign(ClassMask a) const;

  bool operator==(const ArmaturePresentation& rhs) const;
  std::string describe(const TowerNames& names = {}) const;

 private:
  void build_tables();

  Field field_;
  std::size_t arity_ = 0;
  std::vector<LaurentScalar> squares_;
  std::vector<ClassMask> minus_;
  std::vector<int> signs_;
  std::vector<LaurentScalar> lambda_;
};

using PresentationPtr = std::shared_ptr<const ArmaturePresentation>;
PresentationPtr share(ArmaturePresentation p);

// Dense element sum_a c_a x_a of a presentation.
class ArmatureElement {
 public:
  ArmatureElement() = default;
  explicit ArmatureElement(PresentationPtr pres);
  ArmatureElement(PresentationPtr pres, std::vector<LaurentScalar> coeffs);

  static ArmatureElement zero(PresentationPtr pres) { return ArmatureElement(std::move(pres)); }
  static ArmatureElement one(PresentationPtr pres);
  static ArmatureElement basis(PresentationPtr pres, ClassMask a, LaurentScalar c);
  static ArmatureElement basis(PresentationPtr pres, ClassMask a);

  const PresentationPtr& presentation() const { return pres_; }
  const ArmaturePresentation& pres() const { return *pres_; }
  const std::vector<LaurentScalar>& coeffs() const { return c_; }
  const LaurentScalar& operator[](ClassMask a) const { return c_[a]; }
  LaurentScalar& coeff(ClassMask a) { return c_[a]; }

  bool is_zero() const;
  std::vector<ClassMask> support() const;
  // Single-class element c x_a.
  bool is_monomial() const { return support().size() == 1; }
  ClassMask leading_class() const;  // only class of a monomial element

  ArmatureElement operator-() const;
  friend ArmatureElement operator+(const ArmatureElement& x, const ArmatureElement& y);
  friend ArmatureElement operator-(const ArmatureElement& x, const ArmatureElement& y);
  friend ArmatureElement operator*(const LaurentScalar& c, const ArmatureElement& x);
  friend ArmatureElement operator*(const ArmatureElement& x, const ArmatureElement& y);
  bool operator==(const ArmatureElement& rhs) const;

  std::string to_string(const TowerNames& names = {}) const;

 private:
  void check_same(const ArmatureElement& rhs) const;

  PresentationPtr pres_;
  std::vector<LaurentScalar> c_;
};

// OpenMP product, parallel over result classes.
ArmatureElement multiply(const ArmatureElement& x, const ArmatureElement& y);
// Reference product: plain double loop over the two supports.
ArmatureElement multiply_serial(const ArmatureElement& x, const ArmatureElement& y);

ArmatureElement apply_involution(const ArmatureElement& x);

ArmaturePresentation tensor(const ArmaturePresentation& A1, const ArmaturePresentation& A2);

// Presentation of F[B] for the subgroup B spanned by `generators` (which
// must be independent). Sub-class s corresponds to the ascending product of
// the chosen representatives, equal to kappa[s] * x_{parent[s]} in A.
struct SubPresentation {
  ArmaturePresentation pres;
  std::vector<ClassMask> basis;
  std::vector<ClassMask> parent;
  std::vector<LaurentScalar> kappa;

  ArmatureElement embed(const ArmatureElement& x, const PresentationPtr& target) const;
};
SubPresentation subgroup_presentation(const ArmaturePresentation& A, const std::vector<ClassMask>& generators);
// Validates that `elements` is a subgroup (closed, contains 0), then presents it.
SubPresentation subgroup_presentation_from_set(const ArmaturePresentation& A,
                                               const std::vector<ClassMask>& elements);

// u = 1, i, j, ij (k = 0..3) from the signs of (i, j): (-,-) -> 1,
// (+,-) -> j, (-,+) -> i, (+,+) -> ij.
int twist_for_signs(int sign_i, int sign_j);
std::pair<int, int> signs_for_twist(int k);

struct ArmatureFactor {
  ClassMask a = 0;
  ClassMask b = 0;
  QuatAlg algebra;
  QuatInvolution involution;
  int twist = 0;  // basis index of u
};
std::vector<ArmatureFactor> factorize(const ArmaturePresentation& A);

// Maps the quaternion basis 1, i, j, ij to x_0, x_{e1}, x_{e2}, x_{e1+e2} of
// a rank-2 presentation and back.
ArmatureElement from_quaternion(const QuatElem& q, const PresentationPtr& pres);
QuatElem to_quaternion(const ArmatureElement& x, const QuatAlg& alg);

}  // namespace quatinv
