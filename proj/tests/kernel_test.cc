// Copyright 2026 The rnstruct Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "rnstruct/matrix.h"
#include "rnstruct/parser.h"
#include "rnstruct/polynomial.h"
#include "rnstruct/rational.h"
#include "test_util.h"

namespace rnstruct {
namespace {

using testing::RandomMatrix;
using testing::RandomPolynomial;

const std::vector<std::string> kX = {"x1", "x2", "x3", "x4"};

TEST(RationalTest, LowestTerms) {
  Rational x = ParseRational("-6/4");
  EXPECT_EQ(ToString(x), "-3/2");
  EXPECT_GT(x.get_den(), 0);
  EXPECT_EQ(ToString(ParseRational("0/7")), "0");
  EXPECT_THROW(ParseRational("1/0"), std::invalid_argument);
  EXPECT_THROW(ParseRational("1.5"), std::invalid_argument);
  EXPECT_THROW(ParseRational("6/-4"), std::invalid_argument);
}

TEST(ParserTest, SingleTerm) {
  Polynomial p = ParsePolynomial("-1/2*x2^2*x3", kX);
  ASSERT_EQ(p.terms().size(), 1u);
  auto [e, c] = *p.terms().begin();
  EXPECT_EQ(e, (Polynomial::Exponents{0, 2, 1, 0}));
  EXPECT_EQ(c, Rational(-1, 2));
}

TEST(ParserTest, Zero) {
  EXPECT_TRUE(ParsePolynomial("0", kX).IsZero());
  EXPECT_TRUE(ParsePolynomial("x1 - x1", kX).IsZero());
}

TEST(ParserTest, ExpandsSquares) {
  EXPECT_EQ(ParsePolynomial("(x1+x2)^2 - x1^2 - 2*x1*x2", kX),
            ParsePolynomial("x2^2", kX));
}

TEST(ParserTest, UnaryMinusAfterParen) {
  EXPECT_EQ(ParsePolynomial("(-x1)*(+x2)", kX), ParsePolynomial("-x1*x2", kX));
  EXPECT_EQ(ParsePolynomial("  x1 *  x2 ", kX), ParsePolynomial("x1*x2", kX));
}

TEST(ParserTest, ErrorsCarryOffsets) {
  try {
    ParsePolynomial("x1 + * x2", kX);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  EXPECT_THROW(ParsePolynomial("x9", kX), ParseError);
  EXPECT_THROW(ParsePolynomial("(x1", kX), ParseError);
  EXPECT_THROW(ParsePolynomial("x1^-1", kX), ParseError);
  EXPECT_THROW(ParsePolynomial("1/0", kX), ParseError);
}

TEST(ParserTest, ExpressionVariables) {
  EXPECT_EQ(ExpressionVariables("c23^2/c24 + 3*q - c23"),
            (std::vector<std::string>{"c23", "c24", "q"}));
}

TEST(PolynomialTest, Partial) {
  Polynomial p = ParsePolynomial("-1/2*x2^2*x3", kX);
  EXPECT_EQ(p.Partial("x2"), ParsePolynomial("-x2*x3", kX));
  EXPECT_TRUE(ParsePolynomial("x2*x3", kX).Partial("x1").IsZero());
  EXPECT_THROW(p.Partial("y"), std::invalid_argument);
  Polynomial i2 = ParsePolynomial("x2^2*x3^2 + (x2*x3-x3)^2 + x4^2", kX);
  EXPECT_EQ(i2.Partial("x3"),
            ParsePolynomial("2*x2^2*x3 + 2*(x2*x3-x3)*(x2-1)", kX));
}

// Exact difference quotients of a polynomial in one variable are polynomial
// in the step; at step h the quotient minus the derivative is divisible by h.
TEST(PolynomialTest, PartialMatchesDifferenceQuotient) {
  std::mt19937_64 rng(7);
  Polynomial i2 = ParsePolynomial("x2^2*x3^2 + (x2*x3-x3)^2 + x4^2", kX);
  Polynomial d = i2.Partial("x3");
  for (int t = 0; t < 5; ++t) {
    Assignment pt;
    for (const auto& v : kX) pt[v] = testing::RandomRational(rng);
    // i2 is quadratic in x3, so the central difference is exact.
    Rational h = Rational(1, 1000);
    Assignment up = pt, down = pt;
    up["x3"] += h;
    down["x3"] -= h;
    EXPECT_EQ((i2.Evaluate(up) - i2.Evaluate(down)) / (2 * h), d.Evaluate(pt));
  }
}

TEST(PolynomialTest, Evaluate) {
  Assignment pt = {{"x1", 1}, {"x2", 2}, {"x3", 3}, {"x4", 1}};
  EXPECT_EQ(ParsePolynomial("x2*x3", kX).Evaluate(pt), 6);
  EXPECT_EQ(Polynomial::Constant(kX, 0).Evaluate(pt), 0);
  Assignment ones = {{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}};
  EXPECT_EQ(ParsePolynomial("2*x2*x3 - x3 - x4", kX).Evaluate(ones), 0);
  EXPECT_THROW(ParsePolynomial("x2", kX).Evaluate({{"x1", 1}}),
               std::invalid_argument);
}

TEST(PolynomialTest, AlignmentIsExplicit) {
  Polynomial a = ParsePolynomial("x1", {"x1", "x2"});
  Polynomial b = ParsePolynomial("x2", {"x2", "x1"});
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_EQ(a + b.Aligned({"x1", "x2"}), ParsePolynomial("x1 + x2", {"x1", "x2"}));
  EXPECT_EQ(a + 3, ParsePolynomial("x1 + 3", {"x1", "x2"}));
}

TEST(PolynomialProperty, RingAndLeibniz) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    Polynomial p = RandomPolynomial(rng, kX, 4, 3);
    Polynomial q = RandomPolynomial(rng, kX, 4, 3);
    Polynomial s = RandomPolynomial(rng, kX, 3, 2);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) * s, p * s + q * s);
    EXPECT_EQ(ParsePolynomial(p.ToString(), kX), p);
    for (const auto& v : kX) {
      EXPECT_EQ((p * q).Partial(v), p * q.Partial(v) + q * p.Partial(v));
    }
  }
}

TEST(PolynomialProperty, EvaluateIsHomomorphism) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    Polynomial p = RandomPolynomial(rng, kX, 4, 3);
    Polynomial q = RandomPolynomial(rng, kX, 4, 3);
    Assignment pt;
    for (const auto& v : kX) pt[v] = testing::RandomRational(rng);
    EXPECT_EQ((p * q).Evaluate(pt), p.Evaluate(pt) * q.Evaluate(pt));
    EXPECT_EQ((p - q).Evaluate(pt), p.Evaluate(pt) - q.Evaluate(pt));
    EXPECT_EQ(p.Substitute(pt).ConstantTerm(), p.Evaluate(pt));
  }
}

TEST(MatrixTest, Inverse) {
  EXPECT_EQ(Inverse(RMatrix::Identity(4)), RMatrix::Identity(4));
  RMatrix r(4, 4);
  r(0, 3) = 1;
  r(3, 0) = -1;
  r(1, 2) = -1;
  r(2, 1) = 1;
  EXPECT_EQ(Inverse(r), -r);
  RMatrix s = {{1, 2, 3}, {1, 2, 3}, {0, 1, 5}};
  EXPECT_THROW(Inverse(s), SingularMatrixError);
}

TEST(MatrixTest, Rank) {
  EXPECT_EQ(Rank(RMatrix(3, 4)), 0);
  EXPECT_EQ(Rank(RMatrix::Identity(3)), 3);
  RMatrix m = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 0, 1}};
  EXPECT_EQ(Rank(m), 2);
}

TEST(MatrixTest, SectionSevenJacobianRank) {
  // Gradients of I1, I2, I3 of the A_{4,1} example at (1, 2, 3, 5).
  Polynomial i1 = ParsePolynomial("2*x2*x3 - x3 - x4", kX);
  Polynomial i2 = ParsePolynomial("x2^2*x3^2 + (x2*x3-x3)^2 + x4^2", kX);
  Polynomial i3 = ParsePolynomial("x2^3*x3^3 + (x2*x3-x3)^3 - x4^3", kX);
  Assignment pt = {{"x1", 1}, {"x2", 2}, {"x3", 3}, {"x4", 5}};
  RMatrix j(3, 4);
  std::vector<Polynomial> is = {i1, i2, i3};
  for (int a = 0; a < 3; ++a) {
    for (int v = 0; v < 4; ++v) j(a, v) = is[a].Partial(kX[v]).Evaluate(pt);
  }
  EXPECT_EQ(Rank(j), 3);
}

TEST(MatrixProperty, InverseAndDeterminant) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 5;
    RMatrix a = RandomMatrix(rng, n, n), b = RandomMatrix(rng, n, n);
    EXPECT_EQ(Determinant(a * b), Determinant(a) * Determinant(b));
    // Cofactor expansion over constant polynomials is an independent oracle.
    EXPECT_EQ(Determinant(ToPolynomialMatrix(a)).ConstantTerm(), Determinant(a));
    if (IsZero(Determinant(a))) {
      EXPECT_THROW(Inverse(a), SingularMatrixError);
      EXPECT_LT(Rank(a), n);
    } else {
      EXPECT_EQ(Inverse(a) * a, RMatrix::Identity(n));
      EXPECT_EQ(a * Inverse(a), RMatrix::Identity(n));
      EXPECT_EQ(Rank(a), n);
    }
  }
}

TEST(MatrixProperty, RankInvariantUnderRowOperations) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    int rows = 2 + t % 4, cols = 2 + (t / 4) % 4;
    RMatrix a = RandomMatrix(rng, rows, cols, 2);
    if (t % 3 == 0) {
      for (int j = 0; j < cols; ++j) a(rows - 1, j) = a(0, j) * 3;
    }
    int r = Rank(a);
    RMatrix b = a;
    for (int j = 0; j < cols; ++j) std::swap(b(0, j), b(rows - 1, j));
    EXPECT_EQ(Rank(b), r);
    Rational s = 0;
    while (IsZero(s)) s = testing::RandomRational(rng);
    for (int j = 0; j < cols; ++j) b(1, j) *= s;
    EXPECT_EQ(Rank(b), r);
    EXPECT_EQ(Rank(a.Transpose()), r);
  }
}

TEST(MatrixTest, PolynomialDeterminant) {
  std::vector<std::string> v = {"a", "b"};
  PMatrix m(2, 2);
  m(0, 0) = ParsePolynomial("a", v);
  m(0, 1) = ParsePolynomial("b", v);
  m(1, 0) = ParsePolynomial("-b", v);
  m(1, 1) = ParsePolynomial("a", v);
  EXPECT_EQ(Determinant(m), ParsePolynomial("a^2 + b^2", v));
}

}  // namespace
}  // namespace rnstruct
