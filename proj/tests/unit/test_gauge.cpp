#include <gtest/gtest.h>

#include "printers.hpp"

#include "quatinv/errors.hpp"
#include "quatinv/gauge.hpp"
#include "quatinv/sampling.hpp"
#include "quatinv/scalar_parser.hpp"

using namespace quatinv;

namespace {

const Field Q = Field::rational();

LaurentScalar P(const std::string& s, std::size_t arity) { return parse_scalar(s, Q, arity); }

PresentationPtr s2(int twist = 0) {
  return share(ArmaturePresentation::standard({{P("-1", 2), P("-1", 2)}, {P("t1", 2), P("t2", 2)}},
                                              {{-1, -1}, signs_for_twist(twist)}));
}

PresentationPtr s1() {
  return share(ArmaturePresentation::standard({{P("-1", 1), P("-1", 1)}, {P("1", 1), P("t", 1)}},
                                              {{-1, -1}, {1, -1}}));
}

}  // namespace

TEST(Gauge, Grades) {
  ArmatureGauge G(s2());
  EXPECT_EQ(G.grade(0b0100), GammaValue::from_twice({1, 0}));
  EXPECT_EQ(G.grade(0b1100), GammaValue::from_twice({1, 1}));
  EXPECT_TRUE(G.grade(0b0011).is_zero());
  EXPECT_EQ(G.image_size(), 4u);
  EXPECT_TRUE(G.anisotropy_assumed());
}

TEST(Gauge, HomomorphismLawExhaustive) {
  auto C = share(ArmaturePresentation::standard(
      {{P("-1", 2), P("3*t1", 2)}, {P("t1", 2), P("t2", 2)}, {P("t1*t2", 2), P("5", 2)}},
      {{-1, -1}, {1, -1}, {-1, 1}}));
  EXPECT_TRUE(ArmatureGauge(C).homomorphism_law());
  EXPECT_TRUE(ArmatureGauge(s2()).homomorphism_law());
}

TEST(Gauge, EvalIsMinimumOverSupport) {
  ArmatureGauge G(s2());
  auto A = G.presentation();
  ArmatureElement x = ArmatureElement::basis(A, 0b0100, P("t2", 2)) + ArmatureElement::basis(A, 0b0001, P("t1^3", 2));
  // min((1/2, 1), (3, 0)) in right-lex order
  EXPECT_EQ(G.eval(x), GammaValue::from_twice({6, 0}));
  EXPECT_TRUE(G.eval(ArmatureElement::zero(A)).is_infinite());
}

TEST(Gauge, InvarianceUnderInvolution) {
  Rng rng(21);
  for (int twist = 0; twist < 4; ++twist) {
    ArmatureGauge G(s2(twist));
    for (int n = 0; n < 50; ++n) {
      ArmatureElement x = random_element(G.presentation(), rng);
      EXPECT_EQ(G.eval(apply_involution(x)), G.eval(x));
    }
  }
}

TEST(Gauge, ChecksPassOnSamples) {
  Rng rng(22);
  ArmatureGauge G(s1());
  std::vector<std::pair<ArmatureElement, ArmatureElement>> pairs;
  std::vector<ArmatureElement> singles;
  for (int n = 0; n < 60; ++n) {
    pairs.emplace_back(random_element(G.presentation(), rng), random_element(G.presentation(), rng));
    singles.push_back(pairs.back().second);
  }
  EXPECT_TRUE(check_surmultiplicative(G, pairs).ok());
  EXPECT_TRUE(check_special(G, singles).ok());
}

TEST(Residue, BiquaternionOverTwoVariables) {
  ArmatureGauge G(s2());
  ResidueReport R = kernel_and_residue(G);
  EXPECT_EQ(R.kernel, (std::vector<ClassMask>{0, 1, 2, 3}));
  EXPECT_TRUE(R.cardinality_law());
  EXPECT_EQ(R.residue, ArmaturePresentation::standard({{P("-1", 0), P("-1", 0)}}, {{-1, -1}}));
  EXPECT_TRUE(check_semisimple_degree0(R));
  EXPECT_FALSE(find_central_idempotent(R.residue).has_value());
}

TEST(Residue, SplitFactorGivesAProduct) {
  ArmatureGauge G(s1());
  ResidueReport R = kernel_and_residue(G);
  EXPECT_EQ(R.kernel.size(), 8u);
  EXPECT_TRUE(R.cardinality_law());
  EXPECT_TRUE(check_semisimple_degree0(R));
  auto w = find_central_idempotent(R.residue);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(is_central_idempotent(StructureAlgebra::from_presentation(R.residue), w->z));
}

TEST(Residue, ProjectionRejectsNonKernelClasses) {
  ArmatureGauge G(s2());
  ResidueReport R = kernel_and_residue(G);
  auto E = share(R.residue);
  EXPECT_THROW(project_to_residue(R, E, ArmatureElement::basis(G.presentation(), 0b0100)), ContractViolation);
  EXPECT_THROW(project_to_residue(R, E, ArmatureElement::basis(G.presentation(), 1, P("t1", 2))), ContractViolation);
  ArmatureElement y = project_to_residue(R, E, ArmatureElement::basis(G.presentation(), 3, P("(2+t1)/(1+t2)", 2)));
  EXPECT_EQ(y, ArmatureElement::basis(E, 3, P("2", 0)));
}

TEST(Semisimple, DualNumbersAreNot) {
  StructureAlgebra A(Q, 2);
  A.table[0][0][0] = BaseScalar::one(Q);
  A.table[0][1][1] = BaseScalar::one(Q);
  A.table[1][0][1] = BaseScalar::one(Q);
  EXPECT_FALSE(is_semisimple(A));
  StructureAlgebra B(Q, 2);
  B.table[0][0][0] = BaseScalar::one(Q);
  B.table[0][1][1] = BaseScalar::one(Q);
  B.table[1][0][1] = BaseScalar::one(Q);
  B.table[1][1][0] = BaseScalar(Q, 2);  // Q(sqrt 2)
  EXPECT_TRUE(is_semisimple(B));
  EXPECT_EQ(B.center().size(), 2u);
}
