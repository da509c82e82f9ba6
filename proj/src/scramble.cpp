#include "quatinv/scramble.hpp"

#include "quatinv/decompose.hpp"
#include "quatinv/errors.hpp"

namespace quatinv {

namespace {

std::optional<WitnessFactor> try_factor(const ArmatureElement& i, const ArmatureElement& j) {
  try {
    return make_factor(i, j);
  } catch (const ContractViolation&) {
    return std::nullopt;
  }
}

bool grade_reachable(const DecompositionWitness& w, std::size_t p, const ClassMask s, const ArmatureGauge& G) {
  unsigned gs = G.grade_class(s);
  if (gs == 0) return true;
  std::vector<ClassMask> others;
  for (std::size_t q = 0; q < w.factors.size(); ++q) {
    if (q == p) continue;
    others.push_back(class_of(w.factors[q].i));
    others.push_back(class_of(w.factors[q].j));
  }
  std::vector<ClassMask> span{0};
  for (ClassMask b : span_basis(others)) {
    std::size_t n = span.size();
    for (std::size_t k = 0; k < n; ++k) span.push_back(span[k] ^ b);
  }
  for (ClassMask c : span) {
    if (G.grade_class(c) == gs) return true;
  }
  return false;
}

}  // namespace

bool scramble_admissible(const DecompositionWitness& w, std::size_t split_count, ScrambleTarget target,
                         const ArmatureGauge* gauge) {
  if (w.split_count() != split_count) return false;
  for (const auto& f : w.factors) {
    if (is_hyperbolic(f)) return false;
  }
  if (target == ScrambleTarget::Q) {
    std::vector<bool> split = w.split_flags();
    for (std::size_t p = 0; p < w.factors.size(); ++p) {
      if (!split[p]) continue;
      try {
        WitnessFactor ad = to_ad_form(w.factors[p]);
        if (gauge && !grade_reachable(w, p, class_of(ad.j), *gauge)) return false;
      } catch (const ContractViolation&) {
        return false;
      }
    }
  }
  return true;
}

DecompositionWitness scramble(const DecompositionWitness& w, std::uint64_t seed, std::size_t moves,
                              ScrambleTarget target, ScrambleLog* log) {
  Rng rng(seed);
  DecompositionWitness cur = w;
  std::size_t split = w.split_count();
  std::size_t m = w.factors.size();
  ArmatureGauge G(w.source);
  Field F = w.source->field();
  std::size_t arity = w.source->arity();
  std::size_t accepted = 0;
  for (std::size_t attempt = 0; accepted < moves && attempt < 200 * (moves + 1); ++attempt) {
    DecompositionWitness next = cur;
    std::string name;
    std::size_t kind = draw(rng, 6);
    std::size_t p = draw(rng, m);
    std::size_t q = m > 1 ? (p + 1 + draw(rng, m - 1)) % m : p;
    const WitnessFactor& fp = cur.factors[p];
    const WitnessFactor& fq = cur.factors[q];
    std::optional<WitnessFactor> a, b;
    if (kind == 0) {
      a = try_factor(fp.j, fp.i);
      name = "swap";
    } else if (kind == 1) {
      a = try_factor(fp.i, multiply(fp.i, fp.j));
      name = "j*=i";
    } else if (kind == 2) {
      a = try_factor(multiply(fp.i, fp.j), fp.j);
      name = "i*=j";
    } else if (kind == 5) {
      Exponent e(arity);
      for (auto& x : e) x = static_cast<int>(draw_range(rng, -1, 1));
      static const long scales[] = {1, -1, 2, 3};
      LaurentScalar c = LaurentScalar::monomial(BaseScalar(F, scales[draw(rng, 4)]), e);
      a = draw(rng, 2) ? try_factor(c * fp.i, fp.j) : try_factor(fp.i, c * fp.j);
      name = "rescale";
    } else if (p != q && kind == 3) {
      a = try_factor(fp.i, multiply(fp.j, fq.i));
      b = try_factor(fq.i, multiply(fq.j, fp.i));
      name = "transvection";
    } else if (p != q && kind == 4) {
      std::optional<DecompositionWitness> ex;
      if (arity == 1) ex = exchange_factors(cur, p, q, static_cast<int>(draw(rng, 2)), static_cast<int>(draw(rng, 2)));
      if (ex) {
        a = ex->factors[p];
        b = ex->factors[q];
        name = "exchange";
      } else {
        a = try_factor(multiply(fp.i, fq.i), fp.j);
        b = try_factor(fq.i, multiply(fp.j, fq.j));
        name = "product exchange";
      }
    } else {
      continue;
    }
    if (!a || (kind >= 3 && kind <= 4 && !b)) {
      if (log) ++log->rejected;
      continue;
    }
    next.factors[p] = *a;
    if (b) next.factors[q] = *b;
    if (!scramble_admissible(next, split, target, &G)) {
      if (log) ++log->rejected;
      continue;
    }
    cur = std::move(next);
    ++accepted;
    if (log) {
      log->moves.push_back(name + " " + std::to_string(p) + (b ? "," + std::to_string(q) : std::string()));
    }
  }
  return cur;
}

}  // namespace quatinv
