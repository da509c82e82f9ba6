#include "quatinv/armature.hpp"

#include <algorithm>
#include <sstream>

#include "quatinv/errors.hpp"

namespace quatinv {

ArmaturePresentation::ArmaturePresentation(Field field, std::size_t arity) : field_(field), arity_(arity) {
  build_tables();
}

ArmaturePresentation::ArmaturePresentation(std::vector<LaurentScalar> squares, std::vector<ClassMask> minus,
                                           std::vector<int> signs)
    : squares_(std::move(squares)), minus_(std::move(minus)), signs_(std::move(signs)) {
  if (squares_.empty()) throw DomainError("use ArmaturePresentation(field, arity) for the trivial presentation");
  if (squares_.size() > kMaxGenerators) throw DomainError("too many armature generators");
  if (minus_.size() != squares_.size() || signs_.size() != squares_.size()) {
    throw DomainError("squares, pairing and signs must have one entry per generator");
  }
  field_ = squares_[0].field();
  arity_ = squares_[0].arity();
  for (const auto& s : squares_) {
    if (s.is_zero()) throw DomainError("armature generator with zero square");
    if (!(s.field() == field_) || s.arity() != arity_) throw FieldMismatch("armature squares over different towers");
  }
  for (int e : signs_) {
    if (e != 1 && e != -1) throw DomainError("involution signs must be +1 or -1");
  }
  AlternatingForm check(squares_.size(), minus_);  // validates symmetry and diagonal
  (void)check;
  build_tables();
}

ArmaturePresentation ArmaturePresentation::standard(
    const std::vector<std::pair<LaurentScalar, LaurentScalar>>& factors, const std::vector<std::pair<int, int>>& signs) {
  if (factors.empty()) throw DomainError("standard presentation needs at least one factor");
  return standard(factors[0].first.field(), factors[0].first.arity(), factors, signs);
}

ArmaturePresentation ArmaturePresentation::standard(
    Field field, std::size_t arity, const std::vector<std::pair<LaurentScalar, LaurentScalar>>& factors,
    const std::vector<std::pair<int, int>>& signs) {
  if (factors.size() != signs.size()) throw DomainError("one sign pair per factor");
  if (factors.empty()) return ArmaturePresentation(field, arity);
  std::vector<LaurentScalar> sq;
  std::vector<int> sg;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    sq.push_back(factors[k].first);
    sq.push_back(factors[k].second);
    sg.push_back(signs[k].first);
    sg.push_back(signs[k].second);
  }
  return ArmaturePresentation(sq, AlternatingForm::standard(factors.size()).rows, sg);
}

void ArmaturePresentation::build_tables() {
  std::size_t n = squares_.size();
  lambda_.assign(std::size_t{1} << n, LaurentScalar::from_int(field_, arity_, 1));
  for (std::size_t c = 1; c < lambda_.size(); ++c) {
    int k = __builtin_ctz(static_cast<ClassMask>(c));
    lambda_[c] = lambda_[c & (c - 1)] * squares_[k];
  }
}

int ArmaturePresentation::cocycle_sign(ClassMask a, ClassMask b) const {
  int parity = 0;
  for (ClassMask r = a; r; r &= r - 1) {
    int k = __builtin_ctz(r);
    parity ^= popcount(minus_[k] & b & ((1u << k) - 1)) & 1;
  }
  return parity ? -1 : 1;
}

LaurentScalar ArmaturePresentation::cocycle(ClassMask a, ClassMask b) const {
  const LaurentScalar& l = lambda_.at(a & b);
  return cocycle_sign(a, b) < 0 ? -l : l;
}

int ArmaturePresentation::pairing(ClassMask a, ClassMask b) const {
  int parity = 0;
  for (ClassMask r = a; r; r &= r - 1) parity ^= popcount(minus_[__builtin_ctz(r)] & b) & 1;
  return parity ? -1 : 1;
}

int ArmaturePresentation::involution_sign(ClassMask a) const {
  int s = 1;
  for (ClassMask r = a; r; r &= r - 1) {
    int k = __builtin_ctz(r);
    s *= signs_[k];
    // reversal sign: pairs k < l inside a
    if (popcount(minus_[k] & a & ~((2u << k) - 1)) & 1) s = -s;
  }
  return s;
}

bool ArmaturePresentation::operator==(const ArmaturePresentation& rhs) const {
  return field_ == rhs.field_ && arity_ == rhs.arity_ && squares_ == rhs.squares_ && minus_ == rhs.minus_ &&
         signs_ == rhs.signs_;
}

std::string ArmaturePresentation::describe(const TowerNames& names) const {
  std::ostringstream os;
  os << "squares [";
  for (std::size_t k = 0; k < squares_.size(); ++k) os << (k ? ", " : "") << squares_[k].to_string(names);
  os << "] signs [";
  for (std::size_t k = 0; k < signs_.size(); ++k) os << (k ? ", " : "") << signs_[k];
  os << "] anticommuting {";
  bool first = true;
  for (std::size_t k = 0; k < minus_.size(); ++k) {
    for (std::size_t l = k + 1; l < minus_.size(); ++l) {
      if ((minus_[k] >> l) & 1u) {
        os << (first ? "" : ", ") << k + 1 << "-" << l + 1;
        first = false;
      }
    }
  }
  os << "}";
  return os.str();
}

PresentationPtr share(ArmaturePresentation p) { return std::make_shared<const ArmaturePresentation>(std::move(p)); }

ArmatureElement::ArmatureElement(PresentationPtr pres) : pres_(std::move(pres)) {
  c_.assign(pres_->group_size(), LaurentScalar(pres_->field(), pres_->arity()));
}

ArmatureElement::ArmatureElement(PresentationPtr pres, std::vector<LaurentScalar> coeffs)
    : pres_(std::move(pres)), c_(std::move(coeffs)) {
  if (c_.size() != pres_->group_size()) throw DomainError("coefficient vector does not match the group size");
}

ArmatureElement ArmatureElement::one(PresentationPtr pres) {
  LaurentScalar c = LaurentScalar::from_int(pres->field(), pres->arity(), 1);
  return basis(std::move(pres), 0, c);
}

ArmatureElement ArmatureElement::basis(PresentationPtr pres, ClassMask a, LaurentScalar c) {
  ArmatureElement e(std::move(pres));
  e.c_.at(a) = std::move(c);
  return e;
}

ArmatureElement ArmatureElement::basis(PresentationPtr pres, ClassMask a) {
  LaurentScalar c = LaurentScalar::from_int(pres->field(), pres->arity(), 1);
  return basis(std::move(pres), a, c);
}

bool ArmatureElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const LaurentScalar& c) { return c.is_zero(); });
}

std::vector<ClassMask> ArmatureElement::support() const {
  std::vector<ClassMask> s;
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (!c_[a].is_zero()) s.push_back(static_cast<ClassMask>(a));
  }
  return s;
}

ClassMask ArmatureElement::leading_class() const {
  std::vector<ClassMask> s = support();
  if (s.size() != 1) throw DomainError("element is not supported on a single class");
  return s[0];
}

void ArmatureElement::check_same(const ArmatureElement& rhs) const {
  if (!pres_ || !rhs.pres_) throw DomainError("uninitialized armature element");
  if (pres_ != rhs.pres_ && !(*pres_ == *rhs.pres_)) throw FieldMismatch("elements of different presentations");
}

ArmatureElement ArmatureElement::operator-() const {
  ArmatureElement r = *this;
  for (auto& c : r.c_) {
    if (!c.is_zero()) c = -c;
  }
  return r;
}

ArmatureElement operator+(const ArmatureElement& x, const ArmatureElement& y) {
  x.check_same(y);
  ArmatureElement r = x;
  for (std::size_t a = 0; a < r.c_.size(); ++a) {
    if (!y.c_[a].is_zero()) r.c_[a] = r.c_[a] + y.c_[a];
  }
  return r;
}

ArmatureElement operator-(const ArmatureElement& x, const ArmatureElement& y) { return x + (-y); }

ArmatureElement operator*(const LaurentScalar& c, const ArmatureElement& x) {
  ArmatureElement r = x;
  for (auto& v : r.c_) {
    if (!v.is_zero()) v = c * v;
  }
  return r;
}

ArmatureElement operator*(const ArmatureElement& x, const ArmatureElement& y) { return multiply(x, y); }

bool ArmatureElement::operator==(const ArmatureElement& rhs) const {
  check_same(rhs);
  return c_ == rhs.c_;
}

std::string ArmatureElement::to_string(const TowerNames& names) const {
  std::string out;
  for (ClassMask a : support()) {
    if (!out.empty()) out += " + ";
    out += "(" + c_[a].to_string(names) + ")";
    if (a == 0) continue;
    out += "*";
    for (ClassMask r = a; r; r &= r - 1) out += "g" + std::to_string(__builtin_ctz(r) + 1);
  }
  return out.empty() ? "0" : out;
}

namespace {

void require_compatible(const ArmatureElement& x, const ArmatureElement& y) {
  if (!x.presentation() || !y.presentation()) throw DomainError("uninitialized armature element");
  if (x.presentation() != y.presentation() && !(x.pres() == y.pres())) {
    throw FieldMismatch("elements of different presentations");
  }
}

}  // namespace

ArmatureElement multiply(const ArmatureElement& x, const ArmatureElement& y) {
  require_compatible(x, y);
  const ArmaturePresentation& P = x.pres();
  const std::vector<ClassMask> sx = x.support();
  const long n = static_cast<long>(P.group_size());
  std::vector<LaurentScalar> result(static_cast<std::size_t>(n), LaurentScalar(P.field(), P.arity()));
#pragma omp parallel for schedule(dynamic, 4)
  for (long r = 0; r < n; ++r) {
    LaurentScalar acc(P.field(), P.arity());
    for (ClassMask a : sx) {
      ClassMask b = a ^ static_cast<ClassMask>(r);
      const LaurentScalar& yb = y[b];
      if (yb.is_zero()) continue;
      LaurentScalar term = P.square_product(a & b) * (x[a] * yb);
      if (P.cocycle_sign(a, b) < 0) term = -term;
      acc = acc + term;
    }
    result[static_cast<std::size_t>(r)] = std::move(acc);
  }
  return ArmatureElement(x.presentation(), std::move(result));
}

ArmatureElement multiply_serial(const ArmatureElement& x, const ArmatureElement& y) {
  ArmatureElement out(x.presentation());
  require_compatible(x, y);
  const ArmaturePresentation& P = x.pres();
  for (ClassMask a : x.support()) {
    for (ClassMask b : y.support()) {
      out.coeff(a ^ b) = out[a ^ b] + P.cocycle(a, b) * (x[a] * y[b]);
    }
  }
  return out;
}

ArmatureElement apply_involution(const ArmatureElement& x) {
  ArmatureElement r = x;
  for (ClassMask a : x.support()) {
    if (x.pres().involution_sign(a) < 0) r.coeff(a) = -x[a];
  }
  return r;
}

ArmaturePresentation tensor(const ArmaturePresentation& A1, const ArmaturePresentation& A2) {
  if (!(A1.field() == A2.field()) || A1.arity() != A2.arity()) throw FieldMismatch("tensor over different towers");
  if (A1.generators() == 0) return A2;
  if (A2.generators() == 0) return A1;
  std::size_t n1 = A1.generators();
  std::vector<LaurentScalar> sq = A1.squares();
  sq.insert(sq.end(), A2.squares().begin(), A2.squares().end());
  std::vector<ClassMask> minus = A1.minus_rows();
  for (ClassMask r : A2.minus_rows()) minus.push_back(r << n1);
  std::vector<int> sg = A1.signs();
  sg.insert(sg.end(), A2.signs().begin(), A2.signs().end());
  return ArmaturePresentation(sq, minus, sg);
}

ArmatureElement SubPresentation::embed(const ArmatureElement& x, const PresentationPtr& target) const {
  ArmatureElement out(target);
  for (ClassMask s : x.support()) out.coeff(parent[s]) = out[parent[s]] + kappa[s] * x[s];
  return out;
}

SubPresentation subgroup_presentation(const ArmaturePresentation& A, const std::vector<ClassMask>& generators) {
  if (span_basis(generators).size() != generators.size()) {
    throw DomainError("subgroup generators must be independent and nonzero");
  }
  SubPresentation out;
  out.basis = generators;
  std::size_t k = generators.size();
  if (k == 0) {
    out.pres = ArmaturePresentation(A.field(), A.arity());
  } else {
    std::vector<LaurentScalar> sq;
    std::vector<ClassMask> minus(k, 0);
    std::vector<int> sg;
    for (std::size_t i = 0; i < k; ++i) {
      sq.push_back(A.class_square(generators[i]));
      sg.push_back(A.involution_sign(generators[i]));
      for (std::size_t j = 0; j < k; ++j) {
        if (A.pairing(generators[i], generators[j]) < 0) minus[i] |= 1u << j;
      }
    }
    out.pres = ArmaturePresentation(sq, minus, sg);
  }
  std::size_t size = std::size_t{1} << k;
  out.parent.assign(size, 0);
  out.kappa.assign(size, LaurentScalar::from_int(A.field(), A.arity(), 1));
  for (std::size_t s = 1; s < size; ++s) {
    int h = 31 - __builtin_clz(static_cast<ClassMask>(s));
    std::size_t rest = s & ~(std::size_t{1} << h);
    ClassMask pr = out.parent[rest];
    ClassMask g = generators[static_cast<std::size_t>(h)];
    // x'_s = x'_rest * x_g = kappa[rest] * beta(pr, g) * x_{pr + g}
    out.parent[s] = pr ^ g;
    out.kappa[s] = out.kappa[rest] * A.cocycle(pr, g);
  }
  return out;
}

SubPresentation subgroup_presentation_from_set(const ArmaturePresentation& A, const std::vector<ClassMask>& elements) {
  std::vector<ClassMask> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted[0] != 0) throw DomainError("subgroup must contain 0");
  for (ClassMask a : sorted) {
    if (a >= A.group_size()) throw DomainError("class outside the armature group");
    for (ClassMask b : sorted) {
      if (!std::binary_search(sorted.begin(), sorted.end(), a ^ b)) {
        throw DomainError("set is not closed under addition: " + std::to_string(a) + " + " + std::to_string(b));
      }
    }
  }
  return subgroup_presentation(A, span_basis(sorted));
}

int twist_for_signs(int sign_i, int sign_j) {
  if (sign_i < 0 && sign_j < 0) return 0;
  if (sign_i > 0 && sign_j < 0) return 2;
  if (sign_i < 0 && sign_j > 0) return 1;
  return 3;
}

std::pair<int, int> signs_for_twist(int k) {
  switch (k) {
    case 0:
      return {-1, -1};
    case 1:
      return {-1, 1};
    case 2:
      return {1, -1};
    case 3:
      return {1, 1};
  }
  throw DomainError("twist index must be 0..3");
}

std::vector<ArmatureFactor> factorize(const ArmaturePresentation& A) {
  std::vector<ArmatureFactor> out;
  for (auto [a, b] : symplectic_base(A.form())) {
    ArmatureFactor f;
    f.a = a;
    f.b = b;
    f.algebra = QuatAlg(A.class_square(a), A.class_square(b));
    f.twist = twist_for_signs(A.involution_sign(a), A.involution_sign(b));
    f.involution = QuatInvolution::basis_twist(f.algebra, f.twist);
    out.push_back(f);
  }
  return out;
}

ArmatureElement from_quaternion(const QuatElem& q, const PresentationPtr& pres) {
  if (pres->generators() != 2) throw DomainError("quaternion embedding needs a rank-2 presentation");
  ArmatureElement x(pres);
  for (int k = 0; k < 4; ++k) x.coeff(static_cast<ClassMask>(k)) = q[k];
  return x;
}

QuatElem to_quaternion(const ArmatureElement& x, const QuatAlg& alg) {
  if (x.pres().generators() != 2) throw DomainError("quaternion embedding needs a rank-2 presentation");
  return QuatElem(alg, {x[0], x[1], x[2], x[3]});
}

}  // namespace quatinv
