#include <gtest/gtest.h>

#include "printers.hpp"

#include "quatinv/decompose.hpp"
#include "quatinv/errors.hpp"
#include "quatinv/scalar_parser.hpp"
#include "quatinv/scramble.hpp"

using namespace quatinv;

namespace {

const Field Q = Field::rational();

LaurentScalar P(const std::string& s, std::size_t arity) { return parse_scalar(s, Q, arity); }
LaurentScalar T(const std::string& s) { return P(s, 1); }

PresentationPtr base_s() {
  return share(ArmaturePresentation::standard({{P("-1", 0), P("-1", 0)}, {P("1", 0), P("5", 0)}},
                                              {{-1, -1}, {1, -1}}));
}

PresentationPtr base_quaternion() {
  return share(ArmaturePresentation::standard({{P("-1", 0), P("-1", 0)}}, {{-1, -1}}));
}

// Every product of images of the two factors against the source's multiplication.
void expect_exchange(const QuatAlg& H1, const QuatAlg& H2, const QuatAlg& W1, const QuatAlg& W2) {
  ExchangeResult r = lemma32_exchange(H1, 1, H2, 2);
  EXPECT_FALSE(r.identity);
  EXPECT_EQ(r.h1, W1) << r.h1.symbol();
  EXPECT_EQ(r.h2, W2) << r.h2.symbol();
  WitnessReport rep = verify(r.witness);
  EXPECT_TRUE(rep.ok()) << (rep.ok() ? "" : rep.failures.front());
  std::vector<ArmatureElement> basis;
  const auto& f = r.witness.factors;
  for (int k = 0; k < 16; ++k) {
    ArmatureElement x = ArmatureElement::one(r.witness.source);
    if (k & 1) x = multiply(x, f[0].i);
    if (k & 2) x = multiply(x, f[0].j);
    if (k & 4) x = multiply(x, f[1].i);
    if (k & 8) x = multiply(x, f[1].j);
    basis.push_back(x);
  }
  std::vector<ClassMask> classes;
  for (const auto& x : basis) classes.push_back(class_of(x));
  EXPECT_EQ(span_basis(classes).size(), 4u);
}

}  // namespace

TEST(Exchange, SplitPairExample) {
  expect_exchange(QuatAlg(T("3*t"), T("4")), QuatAlg(T("5*t"), T("9")), QuatAlg(T("15"), T("4")),
                  QuatAlg(T("5*t"), T("36")));
  EXPECT_TRUE(is_split(QuatAlg(T("15"), T("4"))));
  EXPECT_TRUE(is_split(QuatAlg(T("5*t"), T("36"))));
}

TEST(Exchange, NonsplitExample) {
  expect_exchange(QuatAlg(T("3*t"), T("2")), QuatAlg(T("5*t"), T("7")), QuatAlg(T("15"), T("2")),
                  QuatAlg(T("5*t"), T("14")));
}

TEST(Exchange, UnramifiedFactorIsLeftAlone) {
  ExchangeResult r = lemma32_exchange(QuatAlg(T("t"), T("1")), 1, QuatAlg(T("2"), T("3")), 0);
  EXPECT_TRUE(r.identity);
  EXPECT_EQ(r.h1, QuatAlg(T("t"), T("1")));
  EXPECT_EQ(r.h2, QuatAlg(T("2"), T("3")));
}

TEST(Exchange, RejectsMismatchedTowers) {
  EXPECT_THROW(lemma32_exchange(QuatAlg(T("t"), T("1")), 1, QuatAlg(P("t1", 2), P("3", 2)), 0), DomainError);
}

TEST(Exchange, NormalizesHigherPowers) {
  auto A = share(ArmaturePresentation::standard({{T("3*t^3"), T("2*t^2")}}, {{-1, 1}}));
  auto w = standard_witness(A);
  auto [i, j] = normalize_ramified(w.factors[0]);
  EXPECT_EQ(square_scalar(i), T("3*t"));
  EXPECT_EQ(square_scalar(j), T("2"));
}

TEST(Prop31, AlreadyNormalized) {
  auto S1 = share(lift_ad_t(*base_s()));
  auto W = lift_witness(standard_witness(base_s()), S1);
  Prop31Result r = prop31_normalize(W);
  ASSERT_EQ(r.status, Prop31Status::Normalized);
  EXPECT_EQ(r.exchanges, 0u);
  EXPECT_EQ(r.a_prime, BaseScalar(Q, 1));
  EXPECT_TRUE(verify(r.witness).ok());
}

TEST(Prop31, NonsplitResidualIsTheContradictionBranch) {
  auto A = share(ArmaturePresentation::standard({{T("-1"), T("-1")}, {T("3*t"), T("5")}}, {{-1, -1}, {-1, 1}}));
  Prop31Result r = prop31_normalize(standard_witness(A));
  EXPECT_EQ(r.status, Prop31Status::Contradiction);
  EXPECT_FALSE(r.message.empty());
}

TEST(Prop31, SplitCountNeverChanges) {
  auto S1 = share(lift_ad_t(*base_s()));
  auto W = lift_witness(standard_witness(base_s()), S1);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto Ws = scramble(W, seed, 10, ScrambleTarget::AdT);
    Prop31Result r = prop31_normalize(Ws);
    ASSERT_EQ(r.status, Prop31Status::Normalized) << seed;
    for (std::size_t n : r.split_history) EXPECT_EQ(n, Ws.split_count());
  }
}

TEST(Thm1, UnscrambledLiftReturnsTheOriginalFactors) {
  auto S = base_s();
  auto S1 = share(lift_ad_t(*S));
  Prop31Result r = prop31_normalize(lift_witness(standard_witness(S), S1));
  DecompositionWitness D = thm1_descend(r.witness);
  ASSERT_TRUE(verify(D).ok());
  EXPECT_EQ(*D.source, *S);
  std::vector<QuatAlg> got, want;
  for (const auto& f : D.factors) got.push_back(f.algebra);
  for (const auto& f : standard_witness(S).factors) want.push_back(f.algebra);
  EXPECT_EQ(got, want);
}

TEST(Thm1, NoSplitFactorToPreserve) {
  auto S = base_quaternion();
  auto S1 = share(lift_ad_t(*S));
  Prop31Result r = prop31_normalize(lift_witness(standard_witness(S), S1));
  DecompositionWitness D = thm1_descend(r.witness);
  EXPECT_TRUE(verify(D).ok());
  EXPECT_EQ(D.split_count(), 0u);
  EXPECT_EQ(D.factors.size(), 1u);
}

TEST(Thm1, ScrambledRoundTrips) {
  auto S = base_s();
  auto S1 = share(lift_ad_t(*S));
  auto W = lift_witness(standard_witness(S), S1);
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    auto Ws = scramble(W, seed, 10, ScrambleTarget::AdT);
    DecompositionWitness D = thm1_descend(prop31_normalize(Ws).witness);
    EXPECT_TRUE(verify(D).ok()) << seed;
    EXPECT_EQ(*D.source, *S);
    EXPECT_EQ(D.split_count(), Ws.split_count() - 1) << seed;
  }
}

TEST(Thm1, RejectsTheWrongShape) {
  auto A = share(ArmaturePresentation::standard({{T("-1"), T("-1")}, {T("2"), T("t")}}, {{-1, -1}, {1, -1}}));
  EXPECT_THROW(thm1_descend(standard_witness(A)), ContractViolation);
}

TEST(Lm22, RecoversEveryTwist) {
  for (int u = 0; u < 4; ++u) {
    auto C = share(ArmaturePresentation::standard({{P("-1", 2), P("-1", 2)}, {P("t1", 2), P("t2", 2)}},
                                                  {{-1, -1}, signs_for_twist(u)}));
    Lm22Result r = lm22_residue_split(C);
    EXPECT_EQ(r.twist, u);
    auto [z1, z2] = signs_for_twist(u);
    EXPECT_EQ(r.zeta1, z1);
    EXPECT_EQ(r.zeta2, z2);
  }
}

TEST(Lm22, RecoversTwistAfterABasisChange) {
  for (int u = 0; u < 4; ++u) {
    auto C = ArmaturePresentation::standard({{P("-1", 2), P("-3", 2)}, {P("t1", 2), P("t2", 2)}},
                                            {{1, -1}, signs_for_twist(u)});
    // New generators mix E into the quaternion part: x_{g1 g3}, x_{g2 g4}, ...
    SubPresentation sub = subgroup_presentation(C, {0b0001, 0b0010, 0b0101, 0b1010});
    Lm22Result r = lm22_residue_split(share(sub.pres));
    EXPECT_EQ(r.twist, u) << u;
  }
}

TEST(Lm22, RejectsWrongImageSize) {
  auto C = share(ArmaturePresentation::standard({{P("-1", 2), P("-1", 2)}, {P("t1", 2), P("5", 2)}},
                                                {{-1, -1}, {-1, -1}}));
  EXPECT_THROW(lm22_residue_split(C), ContractViolation);
}

TEST(Lm23, UnitConstantIsKept) {
  Lm23Result r = lm23_hermitian_normalize(P("7", 2), 0);
  EXPECT_EQ(r.lambda0, BaseScalar(Q, 7));
  EXPECT_EQ(r.u, 0);
  EXPECT_TRUE(lm23_oracle(P("7", 2), 0, r));
}

TEST(Lm23, OddValuationInFirstVariable) {
  LaurentScalar lambda = P("7*t1", 2);
  Lm23Result r = lm23_hermitian_normalize(lambda, 0);
  EXPECT_EQ(r.u, 1);
  EXPECT_EQ(r.lambda0, BaseScalar(Q, -7));
  EXPECT_TRUE(lm23_oracle(lambda, 0, r));
}

TEST(Lm23, BothVariablesOdd) {
  LaurentScalar lambda = P("5*(1+t2)*t1*t2", 2);
  for (int twist = 0; twist < 4; ++twist) {
    Lm23Result r = lm23_hermitian_normalize(lambda, twist);
    EXPECT_EQ(r.u, 3);
    EXPECT_TRUE(lm23_oracle(lambda, twist, r));
    mpq_class q = abs(r.lambda0.rational());
    EXPECT_EQ(q, 5);
  }
}

TEST(Lm23, OracleRejectsAWrongAnswer) {
  LaurentScalar lambda = P("7*t1", 2);
  Lm23Result r = lm23_hermitian_normalize(lambda, 0);
  r.lambda0 = BaseScalar(Q, 7);
  EXPECT_FALSE(lm23_oracle(lambda, 0, r));
}

TEST(Prop21, BiquaternionResidue) {
  auto C = share(ArmaturePresentation::standard({{P("-1", 2), P("-1", 2)}, {P("t1", 2), P("t2", 2)}},
                                                {{-1, -1}, {-1, -1}}));
  DecompositionWitness E = prop21_descend(C);
  ASSERT_EQ(E.factors.size(), 1u);
  EXPECT_TRUE(verify(E).ok());
  EXPECT_EQ(E.factors[0].algebra, QuatAlg(P("-1", 0), P("-1", 0)));
  EXPECT_EQ(E.factors[0].twist, 0);
}

TEST(Prop21, ScrambledThreeFactors) {
  auto C = ArmaturePresentation::standard({{P("-1", 2), P("-1", 2)}, {P("-1", 2), P("-3", 2)}, {P("t1", 2), P("t2", 2)}},
                                          {{-1, -1}, {1, -1}, {-1, -1}});
  // grade-preserving basis change mixing the two base factors
  SubPresentation sub = subgroup_presentation(C, {0b000001, 0b000110, 0b000100, 0b001001, 0b010000, 0b100000});
  DecompositionWitness E = prop21_descend(share(sub.pres));
  EXPECT_EQ(E.factors.size(), 2u);
  EXPECT_TRUE(verify(E).ok());
}

TEST(Prop21, TrivialResidue) {
  auto C = share(ArmaturePresentation::standard({{P("t1", 2), P("t2", 2)}}, {{-1, -1}}));
  DecompositionWitness E = prop21_descend(C);
  EXPECT_TRUE(E.factors.empty());
  EXPECT_EQ(E.source->group_size(), 1u);
  EXPECT_TRUE(verify(E).ok());
}

TEST(Thm2, NoSplitFactor) {
  auto S = base_quaternion();
  auto W = lift_witness(standard_witness(S), share(lift_q(*S, 0)));
  Thm2Result r = thm2_descend(W);
  EXPECT_TRUE(verify(r.witness).ok());
  EXPECT_EQ(r.witness.split_count(), 0u);
  EXPECT_EQ(*r.witness.source, *S);
}

TEST(Thm2, ScrambledRoundTripsForEveryTwist) {
  auto S = base_s();
  for (int twist = 0; twist < 4; ++twist) {
    auto W = lift_witness(standard_witness(S), share(lift_q(*S, twist)));
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      auto Ws = scramble(W, seed, 10, ScrambleTarget::Q);
      Thm2Result r = thm2_descend(Ws);
      WitnessReport rep = verify(r.witness);
      EXPECT_TRUE(rep.ok()) << twist << "/" << seed << ": " << (rep.ok() ? "" : rep.failures.front());
      EXPECT_EQ(r.witness.split_count(), Ws.split_count());
      EXPECT_EQ(*r.witness.source, *S);
      EXPECT_EQ(r.lambdas.size(), Ws.split_count());
    }
  }
}

TEST(Thm2, RamifiedHermitianScalar) {
  // Split factor (x_{g3}, (1 + t1) x_{g4 g5 g6}): its skew generator squares
  // to 5 t1 t2 times a unit. The quaternion factor is corrected by x_{g3}.
  auto S = base_s();
  auto C = share(lift_q(*S, 0));
  auto x = [&](ClassMask a) { return ArmatureElement::basis(C, a); };
  DecompositionWitness D;
  D.source = C;
  D.factors.push_back(make_factor(x(0b000001), x(0b000010)));
  D.factors.push_back(make_factor(x(0b000100), P("1+t1", 2) * x(0b111000)));
  D.factors.push_back(make_factor(multiply(x(0b000100), x(0b010000)), multiply(x(0b000100), x(0b100000))));
  ASSERT_TRUE(verify(D).ok());
  Exponent v = valuation_exponent(D.factors[1].algebra.b);
  EXPECT_EQ(v, (Exponent{1, 1}));
  Thm2Result r = thm2_descend(D);
  ASSERT_EQ(r.lambdas.size(), 1u);
  WitnessReport rep = verify(r.witness);
  EXPECT_TRUE(rep.ok()) << (rep.ok() ? "" : rep.failures.front());
  EXPECT_EQ(r.witness.split_count(), 1u);
  EXPECT_EQ(*r.witness.source, *S);
}

TEST(Scramble, DeterministicAndAdmissible) {
  auto S = base_s();
  auto W = lift_witness(standard_witness(S), share(lift_ad_t(*S)));
  ScrambleLog l1, l2;
  auto a = scramble(W, 5, 10, ScrambleTarget::AdT, &l1);
  auto b = scramble(W, 5, 10, ScrambleTarget::AdT, &l2);
  EXPECT_EQ(l1.moves, l2.moves);
  for (std::size_t k = 0; k < a.factors.size(); ++k) {
    EXPECT_EQ(a.factors[k].i, b.factors[k].i);
    EXPECT_EQ(a.factors[k].j, b.factors[k].j);
  }
  EXPECT_TRUE(verify(a).ok());
  EXPECT_TRUE(scramble_admissible(a, W.split_count(), ScrambleTarget::AdT));
}
