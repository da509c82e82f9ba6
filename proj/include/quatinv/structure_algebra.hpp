#pragma once

#include <optional>
#include <vector>

#include "quatinv/armature.hpp"
#include "quatinv/linalg.hpp"

namespace quatinv {

// Finite-dimensional F-algebra by structure constants: e_i e_j =
// sum_k table[i][j][k] e_k. Element vectors are coordinate lists.
struct StructureAlgebra {
  Field field;
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<BaseScalar>>> table;

  StructureAlgebra() = default;
  StructureAlgebra(Field f, std::size_t n);

  // Twisted group algebra of a presentation over the base field (arity 0).
  static StructureAlgebra from_presentation(const ArmaturePresentation& P);

  std::vector<BaseScalar> multiply(const std::vector<BaseScalar>& x, const std::vector<BaseScalar>& y) const;
  std::vector<BaseScalar> unit_vector(std::size_t k) const;
  std::vector<BaseScalar> one() const;  // requires e_0 to be the identity

  // T(e_i, e_j) = trace of left multiplication by e_i e_j.
  Matrix<BaseScalar> trace_form() const;
  // Basis of the center.
  std::vector<std::vector<BaseScalar>> center() const;
};

// Nondegenerate trace form over Q (characteristic zero criterion).
bool is_semisimple(const StructureAlgebra& A);

// z with z^2 = z, z central, z not 0 or 1, checked exactly.
bool is_central_idempotent(const StructureAlgebra& A, const std::vector<BaseScalar>& z);

}  // namespace quatinv
