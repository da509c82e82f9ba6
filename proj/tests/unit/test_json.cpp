#include <gtest/gtest.h>

#include "printers.hpp"

#include "quatinv/decompose.hpp"
#include "quatinv/errors.hpp"
#include "quatinv/json_io.hpp"
#include "quatinv/scalar_parser.hpp"

using namespace quatinv;

namespace {

const Field Q = Field::rational();
LaurentScalar P(const std::string& s, std::size_t arity) { return parse_scalar(s, Q, arity); }

const char* kS2 = R"({
  "field": "q",
  "tower": ["t1", "t2"],
  "squares": ["-1", "-1", "t1", "t2"],
  "signs": [-1, -1, -1, -1]
})";

}  // namespace

TEST(JsonField, ParsesRationalAndPrime) {
  EXPECT_TRUE(parse_field("q").is_rational());
  EXPECT_EQ(parse_field("fp:7"), Field::prime(7));
  EXPECT_THROW(parse_field("fp:9"), DomainError);
  EXPECT_THROW(parse_field("x"), ParseError);
}

TEST(JsonText, SyntaxErrorCarriesLineAndColumn) {
  try {
    parse_json_text("{\n  \"a\": [1,\n  }");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(JsonPresentation, RoundTrip) {
  Json j = parse_json_text(kS2);
  ArmaturePresentation A = presentation_from_json(j);
  TowerNames names = tower_from_json(j);
  ASSERT_EQ(names, (TowerNames{"t1", "t2"}));
  Json k = presentation_to_json(A, names);
  EXPECT_EQ(presentation_from_json(k), A);
  EXPECT_EQ(presentation_to_json(presentation_from_json(k), names).dump(), k.dump());
}

TEST(JsonPresentation, NonStandardPairing) {
  Json j = parse_json_text(R"({"tower": ["t"], "squares": ["-1", "3t"],
    "signs": [1, -1], "pairing": [[1, -1], [-1, 1]]})");
  ArmaturePresentation A = presentation_from_json(j);
  EXPECT_EQ(presentation_from_json(presentation_to_json(A, {"t"})), A);
}

TEST(JsonPresentation, ShapeErrors) {
  EXPECT_ANY_THROW(presentation_from_json(parse_json_text(R"({"tower": ["t"], "squares": ["-1"]})")));
  EXPECT_THROW(presentation_from_json(parse_json_text(R"({"tower": ["t"], "squares": ["-1", "t^^2"]})")),
               ParseError);
}

TEST(JsonElement, RoundTrip) {
  auto A = share(presentation_from_json(parse_json_text(kS2)));
  TowerNames names{"t1", "t2"};
  ArmatureElement x = P("3*t1", 2) * ArmatureElement::basis(A, 0b0101) + P("1/(1+t2)", 2) * ArmatureElement::basis(A, 0b0010) +
                      ArmatureElement::basis(A, 0);
  Json j = element_to_json(x, names);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[2]["word"], "g1g3");
  EXPECT_EQ(element_from_json(j, A, names), x);
}

TEST(JsonWitness, RoundTripVerifies) {
  auto A = share(presentation_from_json(parse_json_text(kS2)));
  DecompositionWitness W = standard_witness(A);
  Json j = witness_to_json(W, {"t1", "t2"});
  DecompositionWitness V = witness_from_json(j);
  EXPECT_TRUE(verify(V).ok());
  EXPECT_EQ(*V.source, *W.source);
  ASSERT_EQ(V.factors.size(), W.factors.size());
  for (std::size_t k = 0; k < V.factors.size(); ++k) {
    EXPECT_EQ(V.factors[k].i, W.factors[k].i);
    EXPECT_EQ(V.factors[k].j, W.factors[k].j);
  }
}

TEST(JsonQuat, BasisTwistOnly) {
  Json ok = parse_json_text(R"({"tower": ["t"], "a": "3t", "b": "4", "twist": ["0", "0", "2", "0"]})");
  QuatInput q = quat_from_json(ok);
  EXPECT_EQ(q.twist, 2);
  EXPECT_EQ(q.algebra.a, P("3*t", 1));
  Json bad = parse_json_text(R"({"tower": ["t"], "a": "3t", "b": "4", "twist": ["1", "1", "0", "0"]})");
  EXPECT_THROW(quat_from_json(bad), DomainError);
}
