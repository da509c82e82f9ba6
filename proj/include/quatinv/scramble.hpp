#pragma once

#include <string>
#include <vector>

#include "quatinv/gauge.hpp"
#include "quatinv/sampling.hpp"
#include "quatinv/witness.hpp"

namespace quatinv {

// Which descent the scrambled witness is meant for. Both keep the split
// count and avoid hyperbolic factors; Q additionally keeps every split
// factor in single-class Ad form with its skew generator's grade reachable
// from the other factors.
enum class ScrambleTarget { AdT, Q };

struct ScrambleLog {
  std::vector<std::string> moves;
  std::size_t rejected = 0;
};

// Applies `moves` accepted random moves: generator swaps and products
// inside a factor, transvections and exchanges between two factors, and
// monomial rescalings of a single generator.
DecompositionWitness scramble(const DecompositionWitness& w, std::uint64_t seed, std::size_t moves,
                              ScrambleTarget target, ScrambleLog* log = nullptr);

bool scramble_admissible(const DecompositionWitness& w, std::size_t split_count, ScrambleTarget target,
                         const ArmatureGauge* gauge = nullptr);

}  // namespace quatinv
