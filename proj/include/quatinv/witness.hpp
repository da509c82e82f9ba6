#pragma once

#include <string>
#include <vector>

#include "quatinv/armature.hpp"

namespace quatinv {

// One quaternion factor inside a source algebra: images i, j with scalar
// squares, anticommuting, each fixed up to sign by the source involution.
struct WitnessFactor {
  ArmatureElement i;
  ArmatureElement j;
  QuatAlg algebra;
  int sign_i = -1;
  int sign_j = -1;
  int twist = 0;  // basis index of u for Int(u) o gamma

  QuatInvolution involution() const { return QuatInvolution::basis_twist(algebra, twist); }
  bool is_orthogonal() const { return twist != 0; }
};

// Reads squares and signs off the images. Throws ContractViolation when a
// square is not central or an image is not an eigenvector of the involution.
WitnessFactor make_factor(ArmatureElement i, ArmatureElement j);

struct DecompositionWitness {
  PresentationPtr source;
  std::vector<WitnessFactor> factors;

  std::size_t split_count() const;
  std::vector<bool> split_flags() const;
};

struct WitnessReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Squares, anticommutation inside factors, commutation across factors,
// involution signs, and 4^k = dim; images must be single-class elements on
// independent classes, which makes the generated subalgebra everything.
WitnessReport verify(const DecompositionWitness& w);

// Generators taken in pairs (g_{2k}, g_{2k+1}).
DecompositionWitness standard_witness(PresentationPtr source);

// Split, and either symplectic or Int(u) o gamma with u^2 a square.
bool is_hyperbolic(const WitnessFactor& f);

std::string twist_name(int twist);  // "1", "i", "j", "ij"

// Grade-free helpers on single-class elements.
ClassMask class_of(const ArmatureElement& x);
LaurentScalar coefficient_of(const ArmatureElement& x);
LaurentScalar square_scalar(const ArmatureElement& x);  // x^2 as a scalar; throws if not central

}  // namespace quatinv
