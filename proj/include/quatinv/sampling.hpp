#pragma once

#include <cstdint>
#include <random>

#include "quatinv/armature.hpp"

namespace quatinv {

// All randomness goes through this engine with `draw(rng, n)` so that runs
// are reproducible across standard libraries.
using Rng = std::mt19937_64;

inline std::uint64_t draw(Rng& rng, std::uint64_t n) { return rng() % n; }
inline long draw_range(Rng& rng, long lo, long hi) { return lo + static_cast<long>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1))); }
long draw_nonzero(Rng& rng, long bound);  // uniform in [-bound, bound] \ {0}

struct SampleOptions {
  long max_coefficient = 5;
  int max_exponent = 2;
  bool unit_factors = true;  // sometimes multiply by (1 + d t_k) or divide by it
};

// Nonzero c * t^e, occasionally times (1 + d t_k)^{+-1}.
LaurentScalar random_scalar(Field field, std::size_t arity, Rng& rng, const SampleOptions& opt = {});

// Random element with a random support of up to `max_terms` classes.
ArmatureElement random_element(const PresentationPtr& pres, Rng& rng, std::size_t max_terms = 4,
                               const SampleOptions& opt = {});

}  // namespace quatinv
