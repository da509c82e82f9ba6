#include "quatinv/symplectic.hpp"

#include <string>

#include "quatinv/errors.hpp"

namespace quatinv {

AlternatingForm::AlternatingForm(std::size_t n, std::vector<ClassMask> gram) : dim(n), rows(std::move(gram)) {
  if (n > 31) throw DomainError("alternating forms are limited to dimension 31");
  if (rows.size() != n) throw DomainError("Gram matrix has the wrong number of rows");
  for (std::size_t k = 0; k < n; ++k) {
    if (rows[k] >> n) throw DomainError("Gram row " + std::to_string(k) + " has bits beyond the dimension");
    if ((rows[k] >> k) & 1u) throw DomainError("alternating form with nonzero diagonal");
    for (std::size_t l = 0; l < n; ++l) {
      if (((rows[k] >> l) & 1u) != ((rows[l] >> k) & 1u)) throw DomainError("Gram matrix is not symmetric");
    }
  }
}

AlternatingForm AlternatingForm::standard(std::size_t m) {
  std::vector<ClassMask> g(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    g[2 * i] = 1u << (2 * i + 1);
    g[2 * i + 1] = 1u << (2 * i);
  }
  return AlternatingForm(2 * m, g);
}

int AlternatingForm::pair(ClassMask a, ClassMask b) const {
  int parity = 0;
  for (ClassMask r = a; r; r &= r - 1) {
    int k = __builtin_ctz(r);
    parity ^= popcount(rows[k] & b) & 1;
  }
  return parity;
}

std::vector<ClassMask> span_basis(const std::vector<ClassMask>& vectors) {
  std::vector<ClassMask> basis;
  for (ClassMask v : vectors) {
    if (v != 0 && !in_span(basis, v)) basis.push_back(v);
  }
  return basis;
}

bool in_span(const std::vector<ClassMask>& basis, ClassMask v) {
  // reduce against an echelonized copy
  std::vector<ClassMask> ech;
  for (ClassMask b : basis) {
    for (ClassMask e : ech) {
      if (b & (1u << (31 - __builtin_clz(e)))) b ^= e;
    }
    if (b) {
      for (ClassMask& e : ech) {
        if (e & (1u << (31 - __builtin_clz(b)))) e ^= b;
      }
      ech.push_back(b);
    }
  }
  for (ClassMask e : ech) {
    if (v & (1u << (31 - __builtin_clz(e)))) v ^= e;
  }
  return v == 0;
}

std::vector<ClassMask> radical(const AlternatingForm& form, const std::vector<ClassMask>& generators) {
  std::vector<ClassMask> basis = span_basis(generators);
  std::size_t k = basis.size();
  // Solve sum_i c_i <basis_i, basis_j> = 0 for all j: nullspace of the k x k Gram matrix over F2.
  std::vector<ClassMask> gram(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (form.pair(basis[i], basis[j])) gram[i] |= 1u << j;
    }
  }
  // Gaussian elimination on columns: rows of `aug` are (gram row | identity row).
  std::vector<std::pair<ClassMask, ClassMask>> aug;
  for (std::size_t i = 0; i < k; ++i) aug.emplace_back(gram[i], 1u << i);
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < k; ++c) {
    std::size_t p = r;
    while (p < k && !((aug[p].first >> c) & 1u)) ++p;
    if (p == k) continue;
    std::swap(aug[p], aug[r]);
    for (std::size_t q = 0; q < k; ++q) {
      if (q != r && ((aug[q].first >> c) & 1u)) {
        aug[q].first ^= aug[r].first;
        aug[q].second ^= aug[r].second;
      }
    }
    ++r;
  }
  std::vector<ClassMask> out;
  for (std::size_t q = r; q < k; ++q) {
    ClassMask v = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((aug[q].second >> i) & 1u) v ^= basis[i];
    }
    out.push_back(v);
  }
  return out;
}

std::vector<ClassMask> radical(const AlternatingForm& form) {
  std::vector<ClassMask> units;
  for (std::size_t k = 0; k < form.dim; ++k) units.push_back(1u << k);
  return radical(form, units);
}

SymplecticBase symplectic_base(const AlternatingForm& form, const std::vector<ClassMask>& generators) {
  std::vector<ClassMask> rest = span_basis(generators);
  SymplecticBase out;
  while (!rest.empty()) {
    ClassMask a = rest.front();
    std::size_t partner = 0;
    for (std::size_t k = 1; k < rest.size(); ++k) {
      if (form.pair(a, rest[k])) {
        partner = k;
        break;
      }
    }
    if (partner == 0) {
      std::vector<ClassMask> rad = radical(form, generators);
      std::string list;
      for (ClassMask v : rad) list += (list.empty() ? "" : ",") + std::to_string(v);
      throw DegeneratePairing("degenerate pairing: radical has rank " + std::to_string(rad.size()), rad,
                              "{\"radical\":[" + list + "]}");
    }
    ClassMask b = rest[partner];
    out.emplace_back(a, b);
    std::vector<ClassMask> next;
    for (std::size_t k = 1; k < rest.size(); ++k) {
      if (k == partner) continue;
      ClassMask v = rest[k];
      // project onto the orthogonal complement of <a, b>
      if (form.pair(v, b)) v ^= a;
      if (form.pair(rest[k], a)) v ^= b;
      next.push_back(v);
    }
    rest = std::move(next);
  }
  return out;
}

SymplecticBase symplectic_base(const AlternatingForm& form) {
  std::vector<ClassMask> units;
  for (std::size_t k = 0; k < form.dim; ++k) units.push_back(1u << k);
  return symplectic_base(form, units);
}

bool is_symplectic_base(const AlternatingForm& form, const SymplecticBase& base) {
  std::vector<ClassMask> all;
  for (std::size_t i = 0; i < base.size(); ++i) {
    all.push_back(base[i].first);
    all.push_back(base[i].second);
    for (std::size_t j = 0; j < base.size(); ++j) {
      int expect = i == j ? 1 : 0;
      if (form.pair(base[i].first, base[j].second) != expect) return false;
      if (form.pair(base[i].first, base[j].first) != 0) return false;
      if (form.pair(base[i].second, base[j].second) != 0) return false;
    }
  }
  return span_basis(all).size() == all.size();
}

}  // namespace quatinv
