#pragma once

#include <compare>
#include <string>
#include <vector>

#include "quatinv/polynomial.hpp"

namespace quatinv {

// Element of (1/2 Z)^n or +infinity. Coordinates are stored doubled, so
// `twice[k] = 1` means 1/2. Ordered right-to-left lexicographically.
class GammaValue {
 public:
  GammaValue() = default;  // the zero of (1/2 Z)^0

  static GammaValue infinity(std::size_t arity);
  static GammaValue zero(std::size_t arity);
  static GammaValue from_exponent(const Exponent& e);  // integer point
  static GammaValue from_twice(std::vector<int> twice);

  bool is_infinite() const { return infinite_; }
  std::size_t arity() const { return twice_.size(); }
  const std::vector<int>& twice() const { return twice_; }
  bool is_integral() const;  // lies in Z^n (the value group of the base tower)
  bool is_zero() const;

  GammaValue half() const;  // requires every coordinate to be an even multiple of 1/2
  GammaValue doubled() const;
  // Class in (1/2 Z / Z)^n as a bit vector (bit k set iff coordinate k is
  // a half-odd integer).
  unsigned residue_bits() const;

  friend GammaValue operator+(const GammaValue& a, const GammaValue& b);
  std::strong_ordering operator<=>(const GammaValue& rhs) const;
  bool operator==(const GammaValue& rhs) const { return (*this <=> rhs) == 0; }

  // "(1/2, 0)" or "inf".
  std::string to_string() const;

 private:
  bool infinite_ = false;
  std::vector<int> twice_;
};

GammaValue min(const GammaValue& a, const GammaValue& b);

}  // namespace quatinv
