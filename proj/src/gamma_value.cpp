#include "quatinv/gamma_value.hpp"

#include <algorithm>
#include <sstream>

#include "quatinv/errors.hpp"

namespace quatinv {

GammaValue GammaValue::infinity(std::size_t arity) {
  GammaValue g;
  g.infinite_ = true;
  g.twice_.assign(arity, 0);
  return g;
}

GammaValue GammaValue::zero(std::size_t arity) {
  GammaValue g;
  g.twice_.assign(arity, 0);
  return g;
}

GammaValue GammaValue::from_exponent(const Exponent& e) {
  GammaValue g;
  g.twice_.resize(e.size());
  std::transform(e.begin(), e.end(), g.twice_.begin(), [](int x) { return 2 * x; });
  return g;
}

GammaValue GammaValue::from_twice(std::vector<int> twice) {
  GammaValue g;
  g.twice_ = std::move(twice);
  return g;
}

bool GammaValue::is_integral() const {
  return !infinite_ && std::all_of(twice_.begin(), twice_.end(), [](int x) { return x % 2 == 0; });
}

bool GammaValue::is_zero() const {
  return !infinite_ && std::all_of(twice_.begin(), twice_.end(), [](int x) { return x == 0; });
}

GammaValue GammaValue::half() const {
  if (infinite_) return *this;
  GammaValue g = *this;
  for (int& x : g.twice_) {
    if (x % 2 != 0) throw DomainError("value " + to_string() + " leaves (1/2 Z)^n when halved");
    x /= 2;
  }
  return g;
}

GammaValue GammaValue::doubled() const {
  if (infinite_) return *this;
  GammaValue g = *this;
  for (int& x : g.twice_) x *= 2;
  return g;
}

unsigned GammaValue::residue_bits() const {
  if (infinite_) throw DomainError("residue class of infinity");
  unsigned bits = 0;
  for (std::size_t k = 0; k < twice_.size(); ++k) {
    if (twice_[k] % 2 != 0) bits |= 1u << k;
  }
  return bits;
}

GammaValue operator+(const GammaValue& a, const GammaValue& b) {
  if (a.arity() != b.arity()) throw FieldMismatch("value group arity mismatch");
  if (a.infinite_ || b.infinite_) return GammaValue::infinity(a.arity());
  GammaValue g = a;
  for (std::size_t k = 0; k < g.twice_.size(); ++k) g.twice_[k] += b.twice_[k];
  return g;
}

std::strong_ordering GammaValue::operator<=>(const GammaValue& rhs) const {
  if (infinite_ || rhs.infinite_) {
    return static_cast<int>(infinite_) <=> static_cast<int>(rhs.infinite_);
  }
  int c = compare_right_lex(twice_, rhs.twice_);
  return c <=> 0;
}

std::string GammaValue::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < twice_.size(); ++k) {
    if (k) os << ", ";
    if (twice_[k] % 2 == 0) {
      os << twice_[k] / 2;
    } else {
      os << twice_[k] << "/2";
    }
  }
  os << ')';
  return os.str();
}

GammaValue min(const GammaValue& a, const GammaValue& b) { return b < a ? b : a; }

}  // namespace quatinv
