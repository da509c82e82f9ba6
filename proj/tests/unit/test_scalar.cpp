#include <gtest/gtest.h>

#include "printers.hpp"

#include "quatinv/errors.hpp"
#include "quatinv/sampling.hpp"
#include "quatinv/scalar_parser.hpp"

using namespace quatinv;

namespace {

const Field Q = Field::rational();

LaurentScalar P(const std::string& s, std::size_t arity = 1) { return parse_scalar(s, Q, arity); }

}  // namespace

TEST(Parser, ReadsLiterals) {
  EXPECT_EQ(P("3*t1^2/t2", 2), LaurentScalar::monomial(BaseScalar(Q, 3), {2, -1}));
  EXPECT_EQ(P("-1", 0), LaurentScalar::from_int(Q, 0, -1));
  EXPECT_EQ(P("1+t1", 2), LaurentScalar::from_int(Q, 2, 1) + LaurentScalar::variable(Q, 2, 0));
  EXPECT_EQ(P("5t"), P("5*t"));
  EXPECT_EQ(P("(1+t)/(1-t)") * P("1-t"), P("1+t"));
  EXPECT_EQ(P("2/4"), P("1/2"));
}

TEST(Parser, RoundTripsThroughText) {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    LaurentScalar x = random_scalar(Q, 2, rng);
    EXPECT_EQ(parse_scalar(x.to_string({"t1", "t2"}), Q, 2), x);
    EXPECT_EQ(parse_scalar(x.to_compact_string({"t1", "t2"}), Q, 2), x) << x.to_compact_string({"t1", "t2"});
  }
}

TEST(Parser, RejectsMalformedLiterals) {
  try {
    P("t^^2");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(P("3*s"), ParseError);
  EXPECT_THROW(P("(1+t"), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
}

TEST(Field, PrimeSelector) {
  EXPECT_EQ(Field::prime(7).to_string(), "fp:7");
  EXPECT_THROW(Field::prime(9), DomainError);
  EXPECT_THROW(Field::prime(2), DomainError);
}

TEST(Scalar, CanonicalFormMakesEqualValuesEqual) {
  EXPECT_EQ(P("2*t") / P("4*t^2"), P("1/(2*t)"));
  EXPECT_EQ(P("(t^2-1)/(t-1)"), P("t+1"));
  EXPECT_EQ(P("-(1+t)/(-2-2*t)"), P("1/2"));
}

TEST(Scalar, FieldArithmeticProperties) {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    LaurentScalar x = random_scalar(Q, 2, rng), y = random_scalar(Q, 2, rng), z = random_scalar(Q, 2, rng);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x / y) * y, x);
    EXPECT_TRUE((x * x.inverse()).is_one());
  }
}

TEST(Valuation, RightLexOrder) {
  EXPECT_EQ(valuation(P("3*t1^2/t2", 2)), GammaValue::from_exponent({2, -1}));
  // right-to-left: the outer variable decides first
  EXPECT_LT(GammaValue::from_exponent({5, 0}), GammaValue::from_exponent({0, 1}));
  EXPECT_LT(GammaValue::from_exponent({-1, 2}), GammaValue::from_exponent({0, 2}));
  EXPECT_EQ(valuation(P("t1 + t2", 2)), GammaValue::from_exponent({1, 0}));
  EXPECT_TRUE(valuation(P("0")).is_infinite());
  EXPECT_THROW(valuation_exponent(P("0")), DomainError);
}

TEST(Valuation, IsAValuation) {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    LaurentScalar x = random_scalar(Q, 2, rng), y = random_scalar(Q, 2, rng);
    EXPECT_EQ(valuation(x * y), valuation(x) + valuation(y));
    if (!(x + y).is_zero()) EXPECT_GE(valuation(x + y), min(valuation(x), valuation(y)));
  }
}

TEST(Residue, LeadingCoefficientRatio) {
  EXPECT_EQ(residue(P("(1+t)/(2-t)")), BaseScalar(mpq_class(1, 2)));
  EXPECT_EQ(leading_coefficient(P("(3*t+t^2)/(2-t)")), BaseScalar(mpq_class(3, 2)));
  EXPECT_THROW(residue(P("t")), DomainError);
  EXPECT_EQ(residue(P("(5*t2+t1*t2)/(t2-t2^2)", 2)), BaseScalar(Q, 5));
}

TEST(Squares, Examples) {
  EXPECT_TRUE(is_square(P("9+t")));
  EXPECT_FALSE(sqrt_exact(P("9+t")).has_value());
  EXPECT_FALSE(is_square(P("-1")));
  EXPECT_TRUE(is_square(P("4*t^2")));
  EXPECT_FALSE(is_square(P("t")));
  EXPECT_EQ(*sqrt_exact(P("t^2+2*t+1")) * *sqrt_exact(P("t^2+2*t+1")), P("t^2+2*t+1"));
  Field F7 = Field::prime(7);
  EXPECT_TRUE(is_square(LaurentScalar::from_int(F7, 1, 2)));
  EXPECT_FALSE(is_square(LaurentScalar::from_int(F7, 1, 3)));
  EXPECT_TRUE(is_square(parse_scalar("3+t^2", F7, 1)) == false);
}

TEST(Squares, Classes) {
  SquareClass c = square_class(P("12*t^3"));
  EXPECT_EQ(c.unit, BaseScalar(Q, 3));
  EXPECT_EQ(c.parity, std::vector<int>{1});
  EXPECT_EQ(square_class(P("-50", 0)).unit, BaseScalar(Q, -2));
  EXPECT_EQ(square_class(P("5*t1^2*t2^3*(1+t1)", 2)).parity, (std::vector<int>{0, 1}));
}

TEST(Squares, ClassesMultiply) {
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    LaurentScalar x = random_scalar(Q, 2, rng), y = random_scalar(Q, 2, rng);
    EXPECT_EQ(square_class(x * y), multiply_classes(square_class(x), square_class(y)));
    EXPECT_TRUE(is_square(x / representative(square_class(x), Q)));
  }
}

TEST(Squares, FactorizationLimit) {
  mpz_class p("1000003"), q("1000033");
  EXPECT_THROW(squarefree_part(p * q * mpz_class("1000037"), 100), FactorizationLimit);
  EXPECT_EQ(squarefree_part(mpz_class(-12)), -3);
}
