#include <gtest/gtest.h>

#include "generators.hpp"
#include "groupdet/determinant.hpp"
#include "groupdet/io.hpp"
#include "groupdet/report.hpp"
#include "oracles.hpp"

using namespace groupdet;

namespace {

RationalPolynomial x(const GroupPtr& g, int i) { return RationalPolynomial::variable(g, i); }

Complex eval(const RationalPolynomial& p, const std::vector<Complex>& pt) {
  return p.evaluate<Complex>(pt);
}

}  // namespace

TEST(Polynomial, DifferenceOfSquares) {
  auto c2 = catalog::cyclic(2);
  const auto p = (x(c2, 0) + x(c2, 1)) * (x(c2, 0) - x(c2, 1));
  EXPECT_EQ(p.to_string(), "x[e]^2 - x[a]^2");
  const std::vector<Rational> at = {Rational(3), Rational(1)};
  EXPECT_EQ(p.evaluate<Rational>(at), Rational(8));
}

TEST(Polynomial, ZeroPruningAndUniverse) {
  auto c2 = catalog::cyclic(2);
  EXPECT_TRUE((x(c2, 0) - x(c2, 0)).is_zero());
  auto c3 = catalog::cyclic(3);
  EXPECT_THROW(x(c2, 0) + x(c3, 0), UniverseMismatch);
  ComplexPolynomial q(c2);
  q.add_term(Monomial{1, 0}, Complex(1e-13, 0.0));
  EXPECT_TRUE(q.is_zero());
}

TEST(Polynomial, EvaluationIsMultiplicative) {
  std::mt19937_64 rng(11);
  auto g = catalog::cyclic(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = gen::poly(rng, g), q = gen::poly(rng, g);
    for (int k = 0; k < 10; ++k) {
      const auto pt = gen::point(rng, 4);
      EXPECT_LT(std::abs(eval(p * q, pt) - eval(p, pt) * eval(q, pt)), 1e-12);
      EXPECT_LT(std::abs(eval(p + q, pt) - eval(p, pt) - eval(q, pt)), 1e-12);
    }
  }
}

TEST(Polynomial, RingAxioms) {
  std::mt19937_64 rng(12);
  auto g = catalog::cyclic(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = gen::poly(rng, g), b = gen::poly(rng, g), c = gen::poly(rng, g);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Polynomial, IntegerPointsStayExact) {
  auto g = catalog::cyclic(2);
  const auto p = (x(g, 0) * make_rational(1, 3) + x(g, 1)).pow(3);
  const std::vector<Rational> at = {Rational(3), Rational(-2)};
  EXPECT_EQ(p.evaluate<Rational>(at), Rational(-1));
}

TEST(Polynomial, GradedLexDisplay) {
  auto c3 = catalog::cyclic(3);
  const auto p = x(c3, 2) + x(c3, 0) * x(c3, 0) - Rational(2) * x(c3, 1) * x(c3, 2) + RationalPolynomial::constant(c3, Rational(5));
  EXPECT_EQ(p.to_string(), "x[e]^2 - 2*x[a]*x[a^2] + x[a^2] + 5");
  EXPECT_TRUE((x(c3, 0) * x(c3, 1)).is_homogeneous());
  EXPECT_FALSE(p.is_homogeneous());
}

TEST(Polynomial, JsonRoundTrip) {
  std::mt19937_64 rng(13);
  auto g = catalog::cyclic(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = gen::poly(rng, g);
    p *= make_rational(7, 5);
    EXPECT_EQ(io::rational_polynomial_from_json(io::polynomial_to_json(p), g), p);
    const auto cp = to_complex(p);
    EXPECT_EQ(io::complex_polynomial_from_json(io::polynomial_to_json(cp), g), cp);
  }
  const auto j = io::polynomial_to_json(x(g, 1) * make_rational(-1, 2));
  EXPECT_EQ(j.dump(), R"([{"exponents":[0,1,0],"num":"-1","den":"2"}])");
}

TEST(GroupAlgebra, IdentityAndSquareInC2) {
  auto c2 = catalog::cyclic(2);
  const auto whole = Subgroup::whole(c2);
  const auto alpha = generic_element(c2);
  EXPECT_EQ(RationalGAElement::one(whole, c2) * alpha, alpha);
  const auto sq = alpha * alpha;
  EXPECT_EQ(sq.coefficient(0), x(c2, 0) * x(c2, 0) + x(c2, 1) * x(c2, 1));
  EXPECT_EQ(sq.coefficient(1), Rational(2) * x(c2, 0) * x(c2, 1));
}

TEST(GroupAlgebra, ConvolutionAssociative) {
  std::mt19937_64 rng(21);
  auto s3 = catalog::symmetric(3);
  const auto whole = Subgroup::whole(s3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = gen::element(rng, whole, s3), b = gen::element(rng, whole, s3), c = gen::element(rng, whole, s3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(GroupAlgebra, ContextChecks) {
  auto s3 = catalog::symmetric(3);
  const Subgroup c3(s3, {0, 3, 4});
  RationalGAElement a(c3, s3);
  EXPECT_THROW(a.add_term(1, x(s3, 0)), ContextMismatch);
  EXPECT_THROW(a * RationalGAElement::one(Subgroup::whole(s3), s3), ContextMismatch);
}

TEST(GroupAlgebraMatrix, IdentityOneByOneAndAssociativity) {
  std::mt19937_64 rng(22);
  auto s3 = catalog::symmetric(3);
  const auto whole = Subgroup::whole(s3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = gen::ga_matrix(rng, 2, 2, whole, s3), b = gen::ga_matrix(rng, 2, 2, whole, s3),
               c = gen::ga_matrix(rng, 2, 2, whole, s3);
    EXPECT_EQ(a * RationalGAMatrix::identity(2, whole, s3), a);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
  const auto p = gen::ga_matrix(rng, 1, 1, whole, s3), q = gen::ga_matrix(rng, 1, 1, whole, s3);
  EXPECT_EQ((p * q).at(0, 0), p.at(0, 0) * q.at(0, 0));
  EXPECT_THROW(gen::ga_matrix(rng, 2, 3, whole, s3) * gen::ga_matrix(rng, 2, 3, whole, s3), ShapeMismatch);
  EXPECT_THROW(gen::ga_matrix(rng, 2, 2, whole, s3) + gen::ga_matrix(rng, 2, 2, Subgroup(s3, {0, 3, 4}), s3),
               ContextMismatch);
}

TEST(Kronecker, Examples) {
  auto g = catalog::cyclic(1);
  EXPECT_EQ(kronecker(RationalMatrix::identity(2, g), RationalMatrix::identity(3, g)), RationalMatrix::identity(6, g));
  RationalMatrix swap(2, 2, g), two(1, 1, g);
  swap.at(0, 1) = RationalPolynomial::constant(g, 1);
  swap.at(1, 0) = RationalPolynomial::constant(g, 1);
  two.at(0, 0) = RationalPolynomial::constant(g, 2);
  const auto k = kronecker(swap, two);
  EXPECT_TRUE(k.at(0, 0).is_zero());
  EXPECT_EQ(k.at(0, 1), RationalPolynomial::constant(g, 2));
  EXPECT_EQ(k.at(1, 0), RationalPolynomial::constant(g, 2));
}

TEST(Kronecker, MixedProduct) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = gen::complex_matrix(rng, 2, 3), c = gen::complex_matrix(rng, 3, 2);
    const auto b = gen::complex_matrix(rng, 2, 2), d = gen::complex_matrix(rng, 2, 3);
    const ComplexMatrix lhs = kronecker(a, b) * kronecker(c, d);
    const ComplexMatrix rhs = kronecker(ComplexMatrix(a * c), ComplexMatrix(b * d));
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
  }
  auto g = catalog::cyclic(2);
  const auto a = gen::scalar_matrix(rng, 2, 2, g), b = gen::scalar_matrix(rng, 2, 2, g);
  const auto c = gen::scalar_matrix(rng, 2, 2, g), d = gen::scalar_matrix(rng, 2, 2, g);
  EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
}

TEST(Flatten, Examples) {
  auto c2 = catalog::cyclic(2);
  const auto whole = Subgroup::whole(c2);
  RationalGAMatrix a(1, 1, whole, c2);
  a.at(0, 0) = generic_element(c2);
  EXPECT_EQ(flatten(a).at(0, 0), x(c2, 0) + x(c2, 1));
  EXPECT_EQ(flatten(RationalGAMatrix::identity(3, whole, c2)), RationalMatrix::identity(3, c2));
}

TEST(Flatten, IsMultiplicative) {
  std::mt19937_64 rng(41);
  auto c4 = catalog::cyclic(4);
  const auto whole = Subgroup::whole(c4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = gen::ga_matrix(rng, 2, 2, whole, c4), b = gen::ga_matrix(rng, 2, 2, whole, c4);
    EXPECT_EQ(flatten(a * b), flatten(a) * flatten(b));
    EXPECT_EQ(flatten(a + b), flatten(a) + flatten(b));
  }
  // Also holds over a non-abelian group.
  auto s3 = catalog::symmetric(3);
  const auto a = gen::ga_matrix(rng, 2, 2, Subgroup::whole(s3), s3), b = gen::ga_matrix(rng, 2, 2, Subgroup::whole(s3), s3);
  EXPECT_EQ(flatten(a * b), flatten(a) * flatten(b));
}

TEST(DetPoly, Examples) {
  auto c2 = catalog::cyclic(2);
  RationalMatrix one(1, 1, c2);
  one.at(0, 0) = x(c2, 1) * x(c2, 1) + x(c2, 0);
  EXPECT_EQ(det_poly(one), one.at(0, 0));
  RationalMatrix m(2, 2, c2);
  m.at(0, 0) = x(c2, 0);
  m.at(0, 1) = x(c2, 1);
  m.at(1, 0) = x(c2, 1);
  m.at(1, 1) = x(c2, 0);
  EXPECT_EQ(det_poly(m).to_string(), "x[e]^2 - x[a]^2");
  EXPECT_THROW(det_poly(RationalMatrix(2, 3, c2)), NotSquare);
  EXPECT_THROW(det_poly(RationalMatrix::identity(13, c2)), DimensionTooLarge);
  EXPECT_EQ(det_poly(RationalMatrix(0, 0, c2)), RationalPolynomial::constant(c2, 1));
}

TEST(DetPoly, MatchesLeibniz) {
  std::mt19937_64 rng(51);
  auto g = catalog::cyclic(3);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const auto m = gen::scalar_matrix(rng, n, n, g, 2);
      const auto expected = oracle::leibniz_det<RationalPolynomial>(
          n, [&](int i, int j) { return m.at(i, j); }, RationalPolynomial(g), RationalPolynomial::constant(g, 1));
      EXPECT_EQ(det_poly(m), expected) << "n=" << n;
    }
}

TEST(DetNumeric, Examples) {
  EXPECT_EQ(det_numeric(ComplexMatrix::Identity(4, 4)), Complex(1.0, 0.0));
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 3.0;
  EXPECT_EQ(det_numeric(d), Complex(6.0, 0.0));
  EXPECT_EQ(det_numeric(ComplexMatrix::Zero(3, 3)), Complex(0.0, 0.0));
  ComplexMatrix singular(2, 2);
  singular << 1.0, 2.0, 2.0, 4.0;
  EXPECT_LT(std::abs(det_numeric(singular)), 1e-15);
}

TEST(DetNumeric, AgreesWithSymbolicOnConstants) {
  std::mt19937_64 rng(61);
  auto g = catalog::cyclic(1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto m = gen::complex_matrix(rng, 6, 6);
    ComplexPolyMatrix lift(6, 6, g);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) lift.at(i, j) = ComplexPolynomial::constant(g, m(i, j));
    const Complex symbolic = det_poly(lift).evaluate<Complex>(std::vector<Complex>{Complex(1.0, 0.0)});
    EXPECT_LT(relative_residual(det_numeric(m), symbolic), 1e-9);
  }
}

TEST(DetGroupAlgebra, CommutesWithFlatten) {
  std::mt19937_64 rng(71);
  for (const auto& g : {catalog::cyclic(2), catalog::cyclic(3), catalog::cyclic(4)})
    for (int n = 1; n <= 3; ++n) {
      const auto a = gen::ga_matrix(rng, n, n, Subgroup::whole(g), g);
      EXPECT_EQ(det_poly(flatten(a)), det_group_algebra(a).flatten());
    }
  auto s3 = catalog::symmetric(3);
  EXPECT_THROW(det_group_algebra(gen::ga_matrix(rng, 2, 2, Subgroup::whole(s3), s3)), NotAbelian);
}

TEST(DetGroupAlgebra, SixBySixOverAbelianSubgroup) {
  std::mt19937_64 rng(72);
  auto s3 = catalog::symmetric(3);
  const Subgroup c3(s3, {0, 3, 4});
  RationalGAMatrix a(6, 6, c3, s3);
  for (int i = 0; i < 6; ++i) {
    a.at(i, i) = gen::element(rng, c3, s3, 2);
    a.at(i, (i + 1) % 6) = gen::element(rng, c3, s3, 1);
  }
  EXPECT_EQ(det_poly(flatten(a)), det_group_algebra(a).flatten());
}
