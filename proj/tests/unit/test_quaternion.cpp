#include <gtest/gtest.h>

#include "printers.hpp"

#include "quatinv/errors.hpp"
#include "quatinv/sampling.hpp"
#include "quatinv/scalar_parser.hpp"

using namespace quatinv;

namespace {

const Field Q = Field::rational();

LaurentScalar P(const std::string& s, std::size_t arity = 1) { return parse_scalar(s, Q, arity); }

QuatElem random_quat(const QuatAlg& H, Rng& rng) {
  std::array<LaurentScalar, 4> x;
  for (auto& c : x) c = draw(rng, 4) ? random_scalar(H.field(), H.arity(), rng) : LaurentScalar(H.field(), H.arity());
  return QuatElem(H, x);
}

// Brute-force isotropy of a x^2 + b y^2 = z^2 in [-30, 30]^3.
bool isotropic_box(long a, long b) {
  for (long x = -30; x <= 30; ++x) {
    for (long y = -30; y <= 30; ++y) {
      for (long z = -30; z <= 30; ++z) {
        if ((x || y || z) && a * x * x + b * y * y == z * z) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST(Quaternion, Relations) {
  QuatAlg H(P("3*t"), P("2-t"));
  QuatElem i = QuatElem::basis(H, 1), j = QuatElem::basis(H, 2), k = QuatElem::basis(H, 3);
  EXPECT_EQ(i * i, QuatElem::scalar(H, H.a));
  EXPECT_EQ(j * j, QuatElem::scalar(H, H.b));
  EXPECT_EQ(i * j, -(j * i));
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(k * k, QuatElem::scalar(H, -(H.a * H.b)));
}

TEST(Quaternion, NormAndConjugation) {
  Rng rng(2);
  QuatAlg H(P("t1", 2), P("-3*t2", 2));
  for (int n = 0; n < 40; ++n) {
    QuatElem x = random_quat(H, rng), y = random_quat(H, rng);
    EXPECT_EQ(reduced_norm(x * y), reduced_norm(x) * reduced_norm(y));
    EXPECT_EQ(x * canonical_conjugate(x), QuatElem::scalar(H, reduced_norm(x)));
    EXPECT_EQ(x + canonical_conjugate(x), QuatElem::scalar(H, reduced_trace(x)));
    if (!x.is_zero()) EXPECT_EQ(x * inverse(x), QuatElem::scalar(H, P("1", 2)));
  }
}

TEST(Involution, AntiAutomorphismOfOrderTwo) {
  Rng rng(4);
  QuatAlg H(P("-1+t"), P("5*t"));
  for (int k = 0; k < 4; ++k) {
    QuatInvolution theta = QuatInvolution::basis_twist(H, k);
    EXPECT_EQ(theta.is_symplectic(), k == 0);
    for (int n = 0; n < 20; ++n) {
      QuatElem x = random_quat(H, rng), y = random_quat(H, rng);
      EXPECT_EQ(theta.apply(x * y), theta.apply(y) * theta.apply(x));
      EXPECT_EQ(theta.apply(theta.apply(x)), x);
    }
  }
}

TEST(Involution, SignsMatchTwistTable) {
  QuatAlg H(P("3"), P("5"));
  for (int k = 0; k < 4; ++k) {
    QuatInvolution theta = QuatInvolution::basis_twist(H, k);
    auto [si, sj] = signs_for_twist(k);
    EXPECT_EQ(theta.sign_on_basis(1), si) << k;
    EXPECT_EQ(theta.sign_on_basis(2), sj) << k;
    EXPECT_EQ(twist_for_signs(si, sj), k);
  }
  EXPECT_EQ(twist_for_signs(-1, -1), 0);
  EXPECT_EQ(twist_for_signs(-1, 1), 1);
  EXPECT_EQ(twist_for_signs(1, -1), 2);
  EXPECT_EQ(twist_for_signs(1, 1), 3);
}

TEST(Involution, Discriminant) {
  QuatAlg H(P("3", 0), P("5", 0));
  // -Nrd(i) = a, -Nrd(j) = b, -Nrd(ij) = -ab
  EXPECT_EQ(involution_discriminant(QuatInvolution::basis_twist(H, 1)).unit, BaseScalar(Q, 3));
  EXPECT_EQ(involution_discriminant(QuatInvolution::basis_twist(H, 2)).unit, BaseScalar(Q, 5));
  EXPECT_EQ(involution_discriminant(QuatInvolution::basis_twist(H, 3)).unit, BaseScalar(Q, -15));
  QuatAlg M(P("1", 0), P("1", 0));
  EXPECT_EQ(involution_discriminant(QuatInvolution::basis_twist(M, 3)).unit, BaseScalar(Q, -1));
  EXPECT_THROW(involution_discriminant(QuatInvolution::canonical(H)), DomainError);
}

TEST(Hilbert, Symbols) {
  EXPECT_EQ(hilbert_symbol(2, 3, 3), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, 0), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, 2), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, 3), 1);
  EXPECT_EQ(hilbert_symbol(5, 7, 0), 1);
}

TEST(Split, AgreesWithBruteForceOverQ) {
  for (long a = -12; a <= 12; ++a) {
    for (long b = -12; b <= 12; ++b) {
      if (a == 0 || b == 0) continue;
      QuatAlg H(LaurentScalar::from_int(Q, 0, a), LaurentScalar::from_int(Q, 0, b));
      EXPECT_EQ(is_split(H), isotropic_box(a, b)) << a << "," << b;
    }
  }
}

TEST(Split, OverLaurentSeries) {
  EXPECT_FALSE(is_split(QuatAlg(P("3*t"), P("5"))));
  EXPECT_TRUE(is_split(QuatAlg(P("3*t"), P("4"))));
  EXPECT_TRUE(is_split(QuatAlg(P("t"), P("1"))));
  EXPECT_TRUE(is_split(QuatAlg(P("t"), P("-t"))));
  EXPECT_FALSE(is_split(QuatAlg(P("-1"), P("-1"))));
  EXPECT_TRUE(is_split(QuatAlg(P("-1"), P("-1+t"))) == false);
  EXPECT_TRUE(is_split(QuatAlg(P("-1", 2), P("t2", 2))) == false);
  EXPECT_TRUE(is_split(QuatAlg(P("t1", 2), P("1+t2", 2))));
}

TEST(CanonicalForm, RamifiedAndUnramified) {
  CanonicalForm c = canonical_form_over_K(QuatAlg(P("3*t^3"), P("5*t^2")));
  EXPECT_TRUE(c.ramified);
  ASSERT_TRUE(c.generators.has_value());
  EXPECT_TRUE(verify_generator_map(c.generators->first, c.generators->second, c.target));
  CanonicalForm u = canonical_form_over_K(QuatAlg(P("2*t^2"), P("7")));
  EXPECT_FALSE(u.ramified);
  EXPECT_EQ(u.a, BaseScalar(Q, 2));
}

TEST(CanonicalForm, BrauerClassOfExchangedProduct) {
  std::vector<QuatAlg> in = {QuatAlg(P("3*t"), P("2")), QuatAlg(P("5*t"), P("7"))};
  std::vector<QuatAlg> out = {QuatAlg(P("15"), P("2")), QuatAlg(P("5*t"), P("14"))};
  EXPECT_EQ(brauer_class_over_K(in), brauer_class_over_K(out));
  EXPECT_FALSE(brauer_class_over_K(in) == brauer_class_over_K({QuatAlg(P("3*t"), P("2"))}));
}

TEST(Lemma31, GeneratorsAdaptedToTheInvolution) {
  QuatAlg H(P("3*t^3"), P("5"));
  for (int k = 1; k < 4; ++k) {
    QuatInvolution theta = QuatInvolution::basis_twist(H, k);
    Lemma31Generators g = lemma31_generators(H, theta);
    QuatAlg target(LaurentScalar::from_base(g.a, 1) * P("t"), LaurentScalar::from_base(g.b, 1));
    EXPECT_TRUE(verify_generator_map(g.i, g.j, target)) << k;
  }
  EXPECT_THROW(lemma31_generators(QuatAlg(P("3*t"), P("4")), QuatInvolution::basis_twist(QuatAlg(P("3*t"), P("4")), 1)),
               ContractViolation);
}

TEST(Anticommutant, PureQuaternions) {
  QuatAlg H(P("2"), P("3"));
  QuatElem i = QuatElem::basis(H, 1);
  auto basis = anticommutant(i);
  EXPECT_EQ(basis.size(), 2u);
  for (const auto& x : basis) EXPECT_TRUE((x * i + i * x).is_zero());
}
