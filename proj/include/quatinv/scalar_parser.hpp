#pragma once

#include <string_view>

#include "quatinv/laurent_scalar.hpp"

namespace quatinv {

// Parses literals such as "3*t1^2/t2", "-1", "1+t1", "(1+t)/(1-t)", "5t".
// Identifiers must be tower names; a number directly followed by a name or
// a parenthesis is an implicit product. Errors carry the 0-based offset.
LaurentScalar parse_scalar(std::string_view text, Field field, const TowerNames& names);

// Convenience for tests: names default to default_tower_names(arity).
LaurentScalar parse_scalar(std::string_view text, Field field, std::size_t arity);

}  // namespace quatinv
