#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "quatinv/laurent_scalar.hpp"

namespace quatinv {

// (a, b): basis 1, i, j, ij with i^2 = a, j^2 = b, ij = -ji.
struct QuatAlg {
  LaurentScalar a;
  LaurentScalar b;

  QuatAlg() = default;
  QuatAlg(LaurentScalar a_, LaurentScalar b_);

  Field field() const { return a.field(); }
  std::size_t arity() const { return a.arity(); }
  bool operator==(const QuatAlg& rhs) const = default;
  // "(15, 4)", "(5t, 36)".
  std::string symbol(const TowerNames& names = {}) const;
};

class QuatElem {
 public:
  QuatElem() = default;
  QuatElem(QuatAlg alg, std::array<LaurentScalar, 4> x);

  static QuatElem zero(const QuatAlg& alg);
  static QuatElem scalar(const QuatAlg& alg, const LaurentScalar& c);
  // Basis element 1, i, j, ij for k = 0..3.
  static QuatElem basis(const QuatAlg& alg, int k);

  const QuatAlg& algebra() const { return alg_; }
  const LaurentScalar& operator[](int k) const { return x_[k]; }
  const std::array<LaurentScalar, 4>& coords() const { return x_; }
  bool is_zero() const;
  bool is_scalar() const;  // in the center L
  bool is_pure() const { return x_[0].is_zero(); }

  QuatElem operator-() const;
  friend QuatElem operator+(const QuatElem& x, const QuatElem& y);
  friend QuatElem operator-(const QuatElem& x, const QuatElem& y);
  friend QuatElem operator*(const QuatElem& x, const QuatElem& y);
  friend QuatElem operator*(const LaurentScalar& c, const QuatElem& x);
  bool operator==(const QuatElem& rhs) const { return alg_ == rhs.alg_ && x_ == rhs.x_; }

  std::string to_string(const TowerNames& names = {}) const;

 private:
  QuatAlg alg_;
  std::array<LaurentScalar, 4> x_;
};

QuatElem multiply(const QuatElem& x, const QuatElem& y);
QuatElem canonical_conjugate(const QuatElem& x);
LaurentScalar reduced_norm(const QuatElem& x);
LaurentScalar reduced_trace(const QuatElem& x);
QuatElem inverse(const QuatElem& x);

// x -> u * gamma(x) * u^{-1}.
class QuatInvolution {
 public:
  QuatInvolution() = default;
  QuatInvolution(QuatAlg alg, QuatElem twist);

  static QuatInvolution canonical(const QuatAlg& alg);
  // Int(b) o gamma for the basis element b = 1, i, j, ij (k = 0..3).
  static QuatInvolution basis_twist(const QuatAlg& alg, int k);

  const QuatAlg& algebra() const { return alg_; }
  const QuatElem& twist() const { return u_; }
  bool is_symplectic() const { return u_.is_scalar(); }
  bool is_orthogonal() const { return !is_symplectic(); }

  QuatElem apply(const QuatElem& x) const;
  // Eigenvalue of the involution on a basis element (+1 or -1), or 0 when the
  // basis element is not an eigenvector.
  int sign_on_basis(int k) const;

 private:
  QuatAlg alg_;
  QuatElem u_;
  QuatElem u_inv_;
};

QuatElem apply_involution(const QuatInvolution& theta, const QuatElem& x);

// square_class(-Nrd(u)); throws DomainError on a symplectic involution.
SquareClass involution_discriminant(const QuatInvolution& theta,
                                    std::uint64_t bound = kDefaultTrialBound);

// Hilbert symbol (a, b)_p over Q for nonzero rationals; p = 0 is the real place.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& p);

bool is_split(const QuatAlg& A, std::uint64_t bound = kDefaultTrialBound);

// Brauer class over Q((t)) (or F_p((t))) of a product of symbols: the
// residue square class in F^x/F^x2 plus the set of places of Q where the
// unramified part is nontrivial.
struct BrauerClassK {
  BaseScalar residue;
  std::vector<mpz_class> ramified_places;  // sorted; 0 stands for infinity
  bool operator==(const BrauerClassK& rhs) const;
};
BrauerClassK brauer_class_over_K(const std::vector<QuatAlg>& symbols,
                                 std::uint64_t bound = kDefaultTrialBound);

// Normal form of a quaternion algebra over F((t)).
struct CanonicalForm {
  bool ramified = false;  // true: (a t, b); false: (a, b)
  BaseScalar a;
  BaseScalar b;
  QuatAlg target;  // (a t, b) or (a, b) over the same tower as the input
  // Images in the input algebra of the generators of `target`, when every
  // rescaling square root exists in F(t).
  std::optional<std::pair<QuatElem, QuatElem>> generators;
};
CanonicalForm canonical_form_over_K(const QuatAlg& A, std::uint64_t bound = kDefaultTrialBound);

// True iff i, j satisfy i^2 = target.a, j^2 = target.b, ij = -ji and
// 1, i, j, ij are linearly independent.
bool verify_generator_map(const QuatElem& i, const QuatElem& j, const QuatAlg& target);

struct Lemma31Generators {
  QuatElem i;  // i^2 = a t, a in F
  QuatElem j;  // j^2 = b in F
  BaseScalar a;
  BaseScalar b;
  bool twist_is_i = false;  // theta = Int(i) o gamma, else Int(j) o gamma
  bool substituted = false;  // j was replaced by (a rescaling of) i j^{-1}
};
Lemma31Generators lemma31_generators(const QuatAlg& A, const QuatInvolution& theta,
                                     std::uint64_t bound = kDefaultTrialBound);

// Basis of {x : x*e + e*x = 0} (the pure quaternions anticommuting with e);
// e must be invertible and pure.
std::vector<QuatElem> anticommutant(const QuatElem& e);

}  // namespace quatinv
