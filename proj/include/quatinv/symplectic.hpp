#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace quatinv {

// An element of F2^n stored as a bitmask (bit k = coordinate k).
using ClassMask = std::uint32_t;

inline int popcount(ClassMask a) { return __builtin_popcount(a); }

// Alternating bilinear form on F2^n given by its Gram rows: bit l of rows[k]
// is <e_k, e_l>. Rows must be symmetric with zero diagonal.
struct AlternatingForm {
  std::size_t dim = 0;
  std::vector<ClassMask> rows;

  AlternatingForm() = default;
  AlternatingForm(std::size_t n, std::vector<ClassMask> gram);

  // Standard block form: pairs (e_{2i}, e_{2i+1}).
  static AlternatingForm standard(std::size_t m);

  int pair(ClassMask a, ClassMask b) const;  // 0 or 1
};

// Row-echelon basis of the span of `vectors` (the given order decides which
// vectors are kept: a vector enters iff it is independent of those before it).
std::vector<ClassMask> span_basis(const std::vector<ClassMask>& vectors);
bool in_span(const std::vector<ClassMask>& basis, ClassMask v);

// Radical of the form restricted to span(generators), as a basis.
std::vector<ClassMask> radical(const AlternatingForm& form, const std::vector<ClassMask>& generators);
std::vector<ClassMask> radical(const AlternatingForm& form);

// Symplectic Gram-Schmidt on span(generators): repeatedly takes the first
// remaining vector, pairs it with the first remaining partner, and projects
// the rest onto the orthogonal complement. Throws DegeneratePairing with the
// radical when the restricted form is degenerate.
using SymplecticBase = std::vector<std::pair<ClassMask, ClassMask>>;
SymplecticBase symplectic_base(const AlternatingForm& form, const std::vector<ClassMask>& generators);
SymplecticBase symplectic_base(const AlternatingForm& form);

// Exhaustive check of <a_i,b_i> = 1 and all other pairings 0, plus that the
// 2k vectors are independent.
bool is_symplectic_base(const AlternatingForm& form, const SymplecticBase& base);

}  // namespace quatinv
