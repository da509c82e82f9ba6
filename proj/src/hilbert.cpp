#include <algorithm>

#include "quatinv/errors.hpp"
#include "quatinv/quaternion.hpp"

namespace quatinv {

namespace {

// n = p^v * u with p not dividing u.
int strip(mpz_class& n, const mpz_class& p) {
  int v = 0;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

int mod8(const mpz_class& n) {
  mpz_class r = n % 8;
  if (r < 0) r += 8;
  return static_cast<int>(r.get_si());
}

// a rational up to squares as an integer: n/d ~ n*d.
mpz_class integer_class(const mpq_class& q) { return q.get_num() * q.get_den(); }

}  // namespace

int hilbert_symbol(const mpq_class& qa, const mpq_class& qb, const mpz_class& p) {
  if (qa == 0 || qb == 0) throw DomainError("Hilbert symbol of zero");
  mpz_class a = integer_class(qa);
  mpz_class b = integer_class(qb);
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  int alpha = strip(a, p);
  int beta = strip(b, p);
  if (p == 2) {
    int u = mod8(a), v = mod8(b);
    int eu = ((u - 1) / 2) & 1, ev = ((v - 1) / 2) & 1;
    int wu = ((u * u - 1) / 8) & 1, wv = ((v * v - 1) / 8) & 1;
    int e = (eu * ev + alpha * wv + beta * wu) & 1;
    return e ? -1 : 1;
  }
  int sign = 1;
  mpz_class eps = (p - 1) / 2;
  if ((alpha * beta) % 2 == 1 && mpz_odd_p(eps.get_mpz_t())) sign = -sign;
  if (beta % 2 == 1) sign *= mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2 == 1) sign *= mpz_legendre(b.get_mpz_t(), p.get_mpz_t());
  return sign;
}

namespace {

std::vector<mpz_class> relevant_places(const mpz_class& a, const mpz_class& b, std::uint64_t bound) {
  std::vector<mpz_class> places = {0, 2};
  for (const mpz_class& n : {a, b}) {
    for (auto& [p, e] : factor_bounded(n, bound).primes) {
      (void)e;
      if (p != 2) places.push_back(p);
    }
  }
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  return places;
}

bool split_over_base(const BaseScalar& a, const BaseScalar& b, std::uint64_t bound) {
  if (!a.field().is_rational()) return true;  // Br(F_p) = 0
  mpz_class ia = integer_class(a.rational());
  mpz_class ib = integer_class(b.rational());
  for (const mpz_class& p : relevant_places(ia, ib, bound)) {
    if (hilbert_symbol(a.rational(), b.rational(), p) != 1) return false;
  }
  return true;
}

bool class_is_square(const SquareClass& c, std::size_t levels) {
  for (std::size_t k = 0; k < levels; ++k) {
    if (c.parity[k]) return false;
  }
  return c.unit.is_one();
}

// Parity vectors truncated to `levels` inner coordinates are what matter below.
bool split_classes(SquareClass a, SquareClass b, std::size_t levels, std::uint64_t bound) {
  while (levels > 0) {
    std::size_t k = levels - 1;
    int pa = a.parity[k], pb = b.parity[k];
    if (pa == 1 && pb == 1) {
      // (a t, b t) = (a t, -a b)
      SquareClass m = multiply_classes(a, b, bound);
      m.unit = square_class_representative(-m.unit, bound);
      b = m;
      pb = b.parity[k];
    }
    if (pa == 0 && pb == 0) {
      --levels;
      continue;
    }
    // one slot ramified at this level: split iff the other is a square below
    return class_is_square(pa == 1 ? b : a, k);
  }
  return split_over_base(a.unit, b.unit, bound);
}

}  // namespace

bool is_split(const QuatAlg& A, std::uint64_t bound) {
  SquareClass a = square_class(A.a, bound);
  SquareClass b = square_class(A.b, bound);
  return split_classes(a, b, A.arity(), bound);
}

bool BrauerClassK::operator==(const BrauerClassK& rhs) const {
  return residue == rhs.residue && ramified_places == rhs.ramified_places;
}

BrauerClassK brauer_class_over_K(const std::vector<QuatAlg>& symbols, std::uint64_t bound) {
  if (symbols.empty()) throw DomainError("empty symbol list");
  Field F = symbols.front().field();
  BrauerClassK out{BaseScalar::one(F), {}};
  std::vector<mpz_class> places;  // multiset, parity taken at the end
  for (const QuatAlg& A : symbols) {
    if (A.arity() != 1) throw DomainError("brauer_class_over_K expects arity 1");
    SquareClass ca = square_class(A.a, bound);
    SquareClass cb = square_class(A.b, bound);
    BaseScalar u = ca.unit, v = cb.unit, res = BaseScalar::one(F);
    int pa = ca.parity[0], pb = cb.parity[0];
    if (pa == 1 && pb == 0) {
      res = v;  // (u t, v) = (u, v) + (t, v)
    } else if (pa == 0 && pb == 1) {
      res = u;
      std::swap(u, v);
    } else if (pa == 1 && pb == 1) {
      v = -(u * v);  // (u t, v t) = (u t, -u v)
      res = v;
    }
    out.residue = square_class_representative(out.residue * res, bound);
    if (F.is_rational()) {
      mpz_class iu = integer_class(u.rational()), iv = integer_class(v.rational());
      for (const mpz_class& p : relevant_places(iu, iv, bound)) {
        if (hilbert_symbol(u.rational(), v.rational(), p) == -1) places.push_back(p);
      }
    }
  }
  std::sort(places.begin(), places.end());
  for (std::size_t k = 0; k < places.size();) {
    std::size_t e = k;
    while (e < places.size() && places[e] == places[k]) ++e;
    if ((e - k) % 2 == 1) out.ramified_places.push_back(places[k]);
    k = e;
  }
  return out;
}

}  // namespace quatinv
