#include "quatinv/sampling.hpp"

namespace quatinv {

long draw_nonzero(Rng& rng, long bound) {
  long v = draw_range(rng, 1, bound);
  return draw(rng, 2) ? v : -v;
}

LaurentScalar random_scalar(Field field, std::size_t arity, Rng& rng, const SampleOptions& opt) {
  long c = draw_nonzero(rng, opt.max_coefficient);
  if (!field.is_rational() && static_cast<std::uint64_t>(c < 0 ? -c : c) % field.p == 0) c = 1;
  Exponent e(arity);
  for (auto& x : e) x = static_cast<int>(draw_range(rng, -opt.max_exponent, opt.max_exponent));
  LaurentScalar x = LaurentScalar::monomial(BaseScalar(field, c), e);
  if (opt.unit_factors && arity > 0 && draw(rng, 3) == 0) {
    std::size_t k = draw(rng, arity);
    LaurentScalar u = LaurentScalar::from_int(field, arity, 1) +
                      LaurentScalar::from_int(field, arity, draw_nonzero(rng, 3)) *
                          LaurentScalar::variable(field, arity, k);
    if (!u.is_zero()) x = draw(rng, 2) ? x * u : x / u;
  }
  return x;
}

ArmatureElement random_element(const PresentationPtr& pres, Rng& rng, std::size_t max_terms,
                               const SampleOptions& opt) {
  ArmatureElement x(pres);
  std::size_t terms = 1 + draw(rng, max_terms);
  for (std::size_t k = 0; k < terms; ++k) {
    ClassMask a = static_cast<ClassMask>(draw(rng, pres->group_size()));
    x.coeff(a) = random_scalar(pres->field(), pres->arity(), rng, opt);
  }
  return x;
}

}  // namespace quatinv
