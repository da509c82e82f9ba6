#include "quatinv/structure_algebra.hpp"

#include "quatinv/errors.hpp"

namespace quatinv {

StructureAlgebra::StructureAlgebra(Field f, std::size_t n) : field(f), dim(n) {
  table.assign(n, std::vector<std::vector<BaseScalar>>(n, std::vector<BaseScalar>(n, BaseScalar::zero(f))));
}

StructureAlgebra StructureAlgebra::from_presentation(const ArmaturePresentation& P) {
  if (P.arity() != 0) throw DomainError("structure algebra needs a presentation over the base field");
  StructureAlgebra A(P.field(), P.group_size());
  for (ClassMask a = 0; a < P.group_size(); ++a) {
    for (ClassMask b = 0; b < P.group_size(); ++b) {
      A.table[a][b][a ^ b] = P.cocycle(a, b).constant_value();
    }
  }
  return A;
}

std::vector<BaseScalar> StructureAlgebra::multiply(const std::vector<BaseScalar>& x,
                                                   const std::vector<BaseScalar>& y) const {
  std::vector<BaseScalar> out(dim, BaseScalar::zero(field));
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      BaseScalar c = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) {
        if (!table[i][j][k].is_zero()) out[k] += c * table[i][j][k];
      }
    }
  }
  return out;
}

std::vector<BaseScalar> StructureAlgebra::unit_vector(std::size_t k) const {
  std::vector<BaseScalar> v(dim, BaseScalar::zero(field));
  v.at(k) = BaseScalar::one(field);
  return v;
}

std::vector<BaseScalar> StructureAlgebra::one() const { return unit_vector(0); }

Matrix<BaseScalar> StructureAlgebra::trace_form() const {
  // tr(L_{e_k}) = sum_l table[k][l][l]
  std::vector<BaseScalar> tr(dim, BaseScalar::zero(field));
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t l = 0; l < dim; ++l) tr[k] += table[k][l][l];
  }
  Matrix<BaseScalar> T(dim, std::vector<BaseScalar>(dim, BaseScalar::zero(field)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        if (!table[i][j][k].is_zero()) T[i][j] += table[i][j][k] * tr[k];
      }
    }
  }
  return T;
}

std::vector<std::vector<BaseScalar>> StructureAlgebra::center() const {
  // z = sum z_i e_i commutes with every e_j: sum_i z_i (table[i][j][k] - table[j][i][k]) = 0
  Matrix<BaseScalar> m;
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      std::vector<BaseScalar> row(dim, BaseScalar::zero(field));
      bool any = false;
      for (std::size_t i = 0; i < dim; ++i) {
        row[i] = table[i][j][k] - table[j][i][k];
        any = any || !row[i].is_zero();
      }
      if (any) m.push_back(row);
    }
  }
  if (m.empty()) {
    std::vector<std::vector<BaseScalar>> all;
    for (std::size_t i = 0; i < dim; ++i) all.push_back(unit_vector(i));
    return all;
  }
  return nullspace(m, dim, BaseScalar::zero(field), BaseScalar::one(field));
}

bool is_semisimple(const StructureAlgebra& A) {
  if (!A.field.is_rational()) throw DomainError("semisimplicity check requires the base field Q");
  return rank(A.trace_form()) == A.dim;
}

bool is_central_idempotent(const StructureAlgebra& A, const std::vector<BaseScalar>& z) {
  if (z.size() != A.dim) return false;
  bool is_zero = true, is_one = true;
  std::vector<BaseScalar> one = A.one();
  for (std::size_t k = 0; k < A.dim; ++k) {
    is_zero = is_zero && z[k].is_zero();
    is_one = is_one && z[k] == one[k];
  }
  if (is_zero || is_one) return false;
  if (!(A.multiply(z, z) == z)) return false;
  for (std::size_t j = 0; j < A.dim; ++j) {
    std::vector<BaseScalar> e = A.unit_vector(j);
    if (!(A.multiply(z, e) == A.multiply(e, z))) return false;
  }
  return true;
}

}  // namespace quatinv
